//! Morphism payloads: enumeration, composition and the self-embedding.
//!
//! Points of `[b]` are stored 0-based; JSON output is 1-based.

use serde::Serialize;
use serde_json::{json, Value};

use super::species::Species;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Payload {
    /// FI, OI: the images of `0..a`.
    Injection(Vec<u8>),
    /// FI_G, OI_G: an injection and a group element per source point.
    Grouped { map: Vec<u8>, values: Vec<u16> },
    /// FI_d, OI_d: an injection and a colour for each point outside the
    /// image, listed in increasing order of the point.
    Colored { map: Vec<u8>, colors: Vec<u8> },
    /// VI: a `b x a` matrix over `F_q`, row-major.
    Linear { rows: u8, cols: u8, entries: Vec<u8> },
}

/// A morphism `a -> b` of one of the truncated categories.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub source: usize,
    pub target: usize,
    pub payload: Payload,
}

/// All injections `[a] -> [b]` in lexicographic order.
pub(crate) fn injections(a: usize, b: usize, increasing: bool) -> Vec<Vec<u8>> {
    fn go(a: usize, b: usize, increasing: bool, cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if cur.len() == a {
            out.push(cur.clone());
            return;
        }
        let start = if increasing { cur.last().map_or(0, |&v| v as usize + 1) } else { 0 };
        for v in start..b {
            if used[v] {
                continue;
            }
            used[v] = true;
            cur.push(v as u8);
            go(a, b, increasing, cur, used, out);
            cur.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    if a <= b {
        go(a, b, increasing, &mut Vec::with_capacity(a), &mut vec![false; b], &mut out);
    }
    out
}

/// All words of length `len` over `0..base`, lexicographically.
pub(crate) fn words(len: usize, base: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..base).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Points of `[b]` outside the image of `map`, increasing.
fn complement(map: &[u8], b: usize) -> Vec<u8> {
    let mut hit = vec![false; b];
    for &m in map {
        hit[m as usize] = true;
    }
    (0..b as u8).filter(|&i| !hit[i as usize]).collect()
}

/// Full-column-rank `b x a` matrices over `F_q`, sorted row-major.
fn linear_injections(a: usize, b: usize, q: u32) -> Vec<Vec<u8>> {
    // Columns are vectors of F_q^b encoded base q; extend column by column,
    // each time avoiding the span of the columns chosen so far.
    let q = q as usize;
    let size = q.pow(b as u32);
    let decode = |mut v: usize| {
        let mut out = vec![0u8; b];
        for i in (0..b).rev() {
            out[i] = (v % q) as u8;
            v /= q;
        }
        out
    };
    let encode = |w: &[u8]| w.iter().fold(0usize, |acc, &x| acc * q + x as usize);
    let vectors: Vec<Vec<u8>> = (0..size).map(decode).collect();
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, Vec<bool>)> = vec![(Vec::new(), {
        let mut s = vec![false; size];
        s[0] = true;
        s
    })];
    while let Some((cols, span)) = stack.pop() {
        if cols.len() == a {
            let mut entries = vec![0u8; a * b];
            for (j, &c) in cols.iter().enumerate() {
                for i in 0..b {
                    entries[i * a + j] = vectors[c][i];
                }
            }
            out.push(entries);
            continue;
        }
        for c in 0..size {
            if span[c] {
                continue;
            }
            let mut next = span.clone();
            for s in 0..size {
                if !span[s] {
                    continue;
                }
                for t in 1..q {
                    let w: Vec<u8> = (0..b).map(|i| ((vectors[s][i] as usize + t * vectors[c][i] as usize) % q) as u8).collect();
                    next[encode(&w)] = true;
                }
            }
            let mut cols = cols.clone();
            cols.push(c);
            stack.push((cols, next));
        }
    }
    out.sort();
    out
}

/// Every morphism `a -> b`, sorted by payload.
pub(crate) fn enumerate(species: &Species, a: usize, b: usize) -> Vec<Payload> {
    if a > b {
        return Vec::new();
    }
    let increasing = species.kind().order_preserving();
    let mut out: Vec<Payload> = match species {
        Species::Fi | Species::Oi => injections(a, b, increasing).into_iter().map(Payload::Injection).collect(),
        Species::FiG(g) | Species::OiG(g) => {
            let ws = words(a, g.order());
            injections(a, b, increasing)
                .into_iter()
                .flat_map(|map| {
                    ws.iter().map(move |w| Payload::Grouped { map: map.clone(), values: w.iter().map(|&x| x as u16).collect() })
                })
                .collect()
        }
        Species::FiD(d) | Species::OiD(d) => {
            let ws = words(b - a, *d as usize);
            injections(a, b, increasing)
                .into_iter()
                .flat_map(|map| ws.iter().map(move |w| Payload::Colored { map: map.clone(), colors: w.iter().map(|&x| x as u8).collect() }))
                .collect()
        }
        Species::Vi(q) => {
            linear_injections(a, b, *q).into_iter().map(|entries| Payload::Linear { rows: b as u8, cols: a as u8, entries }).collect()
        }
    };
    out.sort();
    out
}

/// `g ∘ f` for `f: a -> b`, `g: b -> c`; assumes the shapes match.
pub(crate) fn compose(species: &Species, g: &Payload, f: &Payload, c: usize) -> Payload {
    match (g, f) {
        (Payload::Injection(g), Payload::Injection(f)) => Payload::Injection(f.iter().map(|&x| g[x as usize]).collect()),
        (Payload::Grouped { map: m2, values: v2 }, Payload::Grouped { map: m1, values: v1 }) => {
            let group = species.group().expect("grouped payloads belong to FI_G or OI_G");
            let map = m1.iter().map(|&x| m2[x as usize]).collect();
            let values = m1.iter().zip(v1).map(|(&x, &g1)| group.mul(v2[x as usize] as usize, g1 as usize) as u16).collect();
            Payload::Grouped { map, values }
        }
        (Payload::Colored { map: m2, colors: c2 }, Payload::Colored { map: m1, colors: c1 }) => {
            let b = m2.len();
            let map: Vec<u8> = m1.iter().map(|&x| m2[x as usize]).collect();
            // colour index of each point of [b] outside im(f), and the same for [c] and g
            let mut pos1 = vec![usize::MAX; b];
            for (i, &r) in complement(m1, b).iter().enumerate() {
                pos1[r as usize] = i;
            }
            let mut pre2 = vec![usize::MAX; c];
            for (r, &x) in m2.iter().enumerate() {
                pre2[x as usize] = r;
            }
            let mut pos2 = vec![usize::MAX; c];
            for (i, &x) in complement(m2, c).iter().enumerate() {
                pos2[x as usize] = i;
            }
            let colors = complement(&map, c)
                .into_iter()
                .map(|x| {
                    let r = pre2[x as usize];
                    if r != usize::MAX {
                        c1[pos1[r]]
                    } else {
                        c2[pos2[x as usize]]
                    }
                })
                .collect();
            Payload::Colored { map, colors }
        }
        (Payload::Linear { rows: rc, cols: cb, entries: ge }, Payload::Linear { rows: rb, cols: ca, entries: fe }) => {
            debug_assert_eq!(cb, rb);
            let q = species.q().expect("linear payloads belong to VI");
            let (rc, cb, ca) = (*rc as usize, *cb as usize, *ca as usize);
            let mut entries = vec![0u8; rc * ca];
            for i in 0..rc {
                for j in 0..ca {
                    let mut s = 0u32;
                    for k in 0..cb {
                        s += ge[i * cb + k] as u32 * fe[k * ca + j] as u32;
                    }
                    entries[i * ca + j] = (s % q) as u8;
                }
            }
            Payload::Linear { rows: rc as u8, cols: ca as u8, entries }
        }
        _ => unreachable!("payloads of one category share a variant"),
    }
}

pub(crate) fn identity(species: &Species, x: usize) -> Payload {
    let map: Vec<u8> = (0..x as u8).collect();
    match species {
        Species::Fi | Species::Oi => Payload::Injection(map),
        Species::FiG(g) | Species::OiG(g) => Payload::Grouped { map, values: vec![g.identity() as u16; x] },
        Species::FiD(_) | Species::OiD(_) => Payload::Colored { map, colors: Vec::new() },
        Species::Vi(_) => {
            let mut entries = vec![0u8; x * x];
            for i in 0..x {
                entries[i * x + i] = 1;
            }
            Payload::Linear { rows: x as u8, cols: x as u8, entries }
        }
    }
}

/// The self-embedding: a new minimum point (or a new first basis vector)
/// is added to source and target and fixed.
pub(crate) fn embed(species: &Species, p: &Payload) -> Payload {
    let shift = |map: &[u8]| std::iter::once(0).chain(map.iter().map(|&v| v + 1)).collect::<Vec<u8>>();
    match p {
        Payload::Injection(m) => Payload::Injection(shift(m)),
        Payload::Grouped { map, values } => {
            let e = species.group().expect("grouped payload").identity() as u16;
            Payload::Grouped { map: shift(map), values: std::iter::once(e).chain(values.iter().copied()).collect() }
        }
        Payload::Colored { map, colors } => Payload::Colored { map: shift(map), colors: colors.clone() },
        Payload::Linear { rows, cols, entries } => {
            let (r, c) = (*rows as usize, *cols as usize);
            let mut out = vec![0u8; (r + 1) * (c + 1)];
            out[0] = 1;
            for i in 0..r {
                for j in 0..c {
                    out[(i + 1) * (c + 1) + j + 1] = entries[i * c + j];
                }
            }
            Payload::Linear { rows: (r + 1) as u8, cols: (c + 1) as u8, entries: out }
        }
    }
}

/// Compact text form, used for morphism labels.
pub(crate) fn label(species: &Species, p: &Payload) -> String {
    let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(",");
    let one_based = |m: &[u8]| join(&mut m.iter().map(|v| (v + 1).to_string()));
    match p {
        Payload::Injection(m) => format!("[{}]", one_based(m)),
        Payload::Grouped { map, values } => {
            let g = species.group().expect("grouped payload");
            format!("[{}|{}]", one_based(map), join(&mut values.iter().map(|&v| g.labels[v as usize].clone())))
        }
        Payload::Colored { map, colors } => format!("[{}|{}]", one_based(map), one_based(colors)),
        Payload::Linear { rows, cols, entries } => {
            let c = *cols as usize;
            let rows: Vec<String> =
                (0..*rows as usize).map(|i| entries[i * c..(i + 1) * c].iter().map(|v| v.to_string()).collect::<String>()).collect();
            format!("[{}]", rows.join(";"))
        }
    }
}

/// JSON form with 1-based points and colours.
pub(crate) fn to_json(species: &Species, p: &Payload) -> Value {
    let one_based = |m: &[u8]| m.iter().map(|&v| v as u32 + 1).collect::<Vec<_>>();
    match p {
        Payload::Injection(m) => json!({"map": one_based(m)}),
        Payload::Grouped { map, values } => {
            let g = species.group().expect("grouped payload");
            json!({"map": one_based(map), "g": values.iter().map(|&v| g.labels[v as usize].clone()).collect::<Vec<_>>()})
        }
        Payload::Colored { map, colors } => json!({"map": one_based(map), "colors": one_based(colors)}),
        Payload::Linear { rows, cols, entries } => {
            let c = *cols as usize;
            let m: Vec<Vec<u8>> = (0..*rows as usize).map(|i| entries[i * c..(i + 1) * c].to_vec()).collect();
            json!({"matrix": m})
        }
    }
}
