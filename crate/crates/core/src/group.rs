//! Finite groups given by explicit multiplication tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group on elements `0..order` with `table[a][b] = a * b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteGroup {
    pub name: String,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    #[serde(skip)]
    identity: usize,
    #[serde(skip)]
    inverses: Vec<usize>,
}

#[derive(Deserialize)]
struct GroupFile {
    name: Option<String>,
    labels: Option<Vec<String>>,
    table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses by enumeration.
    pub fn from_table(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        let bad = |m: String| Error::InvalidGroup(m);
        if n == 0 {
            return Err(bad("empty table".into()));
        }
        if labels.len() != n {
            return Err(bad(format!("{} labels for {n} elements", labels.len())));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(bad("table is not an n x n array of element indices".into()));
            }
        }
        let identity =
            (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a)).ok_or_else(|| bad("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| bad(format!("element {a} has no inverse")))?;
            inverses.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.into(), labels, table, identity, inverses })
    }

    /// For tables produced by composing morphisms, which are associative by
    /// construction; skips the cubic associativity check.
    pub(crate) fn from_trusted_table(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>, identity: usize) -> Self {
        let n = table.len();
        let mut inverses = vec![usize::MAX; n];
        for a in 0..n {
            if let Some(b) = table[a].iter().position(|&x| x == identity) {
                inverses[a] = b;
            }
        }
        debug_assert!(inverses.iter().all(|&i| i < n));
        FiniteGroup { name: name.into(), labels, table, identity, inverses }
    }

    /// Parse `{"name": ..., "labels": [...], "table": [[...]]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let g: GroupFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let n = g.table.len();
        let labels = g.labels.unwrap_or_else(|| (0..n).map(|i| format!("g{i}")).collect());
        Self::from_table(g.name.unwrap_or_else(|| "custom".into()), labels, g.table)
    }

    pub fn cyclic(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        let table = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
        let labels = (0..k).map(|i| if i == 0 { "1".to_string() } else { format!("r^{i}") }).collect();
        Self::from_table(format!("C{k}"), labels, table)
    }

    pub fn klein() -> Self {
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        let labels = ["1", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
        Self::from_table("Klein", labels, table).expect("valid")
    }

    /// `S_3` as permutations of `{0,1,2}` in lexicographic order, composed as
    /// functions: `(a * b)(i) = a(b(i))`.
    pub fn s3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let table = perms.iter().map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect()).collect();
        let labels = perms.iter().map(|p| format!("[{}{}{}]", p[0] + 1, p[1] + 1, p[2] + 1)).collect();
        Self::from_table("S3", labels, table).expect("valid")
    }

    /// Built-in names: `c1`..`c6`, `s3`, `klein`.
    pub fn builtin(name: &str) -> Result<Self> {
        let lower = name.to_ascii_lowercase();
        match lower.as_str() {
            "s3" => Ok(Self::s3()),
            "klein" | "v4" => Ok(Self::klein()),
            _ => {
                let k = lower
                    .strip_prefix('c')
                    .and_then(|s| s.parse::<usize>().ok())
                    .filter(|k| (1..=6).contains(k))
                    .ok_or_else(|| Error::InvalidGroup(format!("unknown built-in group {name:?}")))?;
                Self::cyclic(k)
            }
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }
    pub fn identity(&self) -> usize {
        self.identity
    }
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// A generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.order();
        let mut inside = vec![false; n];
        inside[self.identity] = true;
        let mut members = vec![self.identity];
        let mut gens = Vec::new();
        for g in 0..n {
            if inside[g] {
                continue;
            }
            gens.push(g);
            inside[g] = true;
            members.push(g);
            // Re-close the subgroup under all chosen generators.
            let mut i = 0;
            while i < members.len() {
                let m = members[i];
                for &s in &gens {
                    let x = self.table[m][s];
                    if !inside[x] {
                        inside[x] = true;
                        members.push(x);
                    }
                }
                i += 1;
            }
            if members.len() == n {
                break;
            }
        }
        gens
    }
}
