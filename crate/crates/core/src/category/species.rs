use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::group::FiniteGroup;

/// The seven families of combinatorial categories.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpeciesKind {
    #[serde(rename = "FI")]
    Fi,
    #[serde(rename = "FI_G")]
    FiG,
    #[serde(rename = "FI_d")]
    FiD,
    #[serde(rename = "OI")]
    Oi,
    #[serde(rename = "OI_G")]
    OiG,
    #[serde(rename = "OI_d")]
    OiD,
    #[serde(rename = "VI")]
    Vi,
}

impl SpeciesKind {
    pub const ALL: [SpeciesKind; 7] =
        [SpeciesKind::Fi, SpeciesKind::FiG, SpeciesKind::FiD, SpeciesKind::Oi, SpeciesKind::OiG, SpeciesKind::OiD, SpeciesKind::Vi];

    pub fn name(self) -> &'static str {
        match self {
            SpeciesKind::Fi => "FI",
            SpeciesKind::FiG => "FI_G",
            SpeciesKind::FiD => "FI_d",
            SpeciesKind::Oi => "OI",
            SpeciesKind::OiG => "OI_G",
            SpeciesKind::OiD => "OI_d",
            SpeciesKind::Vi => "VI",
        }
    }

    /// Morphisms preserve the natural order of the underlying sets.
    pub fn order_preserving(self) -> bool {
        matches!(self, SpeciesKind::Oi | SpeciesKind::OiG | SpeciesKind::OiD)
    }
}

impl fmt::Display for SpeciesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpeciesKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fi" => Ok(SpeciesKind::Fi),
            "fi_g" => Ok(SpeciesKind::FiG),
            "fi_d" => Ok(SpeciesKind::FiD),
            "oi" => Ok(SpeciesKind::Oi),
            "oi_g" => Ok(SpeciesKind::OiG),
            "oi_d" => Ok(SpeciesKind::OiD),
            "vi" => Ok(SpeciesKind::Vi),
            _ => Err(Error::InvalidSpecies(format!("unknown species {s:?}"))),
        }
    }
}

/// A species together with its parameter (group, number of colours, or `q`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Species {
    Fi,
    Oi,
    FiG(Arc<FiniteGroup>),
    OiG(Arc<FiniteGroup>),
    FiD(u32),
    OiD(u32),
    Vi(u32),
}

impl Species {
    /// Assemble a species from a kind and whichever parameters it needs;
    /// parameters that the kind does not use are ignored.
    pub fn from_parts(kind: SpeciesKind, group: Option<FiniteGroup>, d: Option<u32>, q: Option<u32>) -> Result<Self> {
        let need_group = || group.clone().map(Arc::new).ok_or_else(|| Error::InvalidSpecies(format!("{kind} needs a group")));
        let need_d = || match d {
            Some(d) if d >= 1 => Ok(d),
            Some(_) => Err(Error::InvalidSpecies("number of colours must be at least 1".into())),
            None => Err(Error::InvalidSpecies(format!("{kind} needs a number of colours d"))),
        };
        Ok(match kind {
            SpeciesKind::Fi => Species::Fi,
            SpeciesKind::Oi => Species::Oi,
            SpeciesKind::FiG => Species::FiG(need_group()?),
            SpeciesKind::OiG => Species::OiG(need_group()?),
            SpeciesKind::FiD => Species::FiD(need_d()?),
            SpeciesKind::OiD => Species::OiD(need_d()?),
            SpeciesKind::Vi => {
                let q = q.ok_or_else(|| Error::InvalidSpecies("VI needs a prime q".into()))?;
                Species::vi(q)?
            }
        })
    }

    pub fn vi(q: u32) -> Result<Self> {
        if !is_prime(q as u64) || q > 251 {
            return Err(Error::InvalidField(format!("q = {q} must be a prime below 256")));
        }
        Ok(Species::Vi(q))
    }

    pub fn kind(&self) -> SpeciesKind {
        match self {
            Species::Fi => SpeciesKind::Fi,
            Species::Oi => SpeciesKind::Oi,
            Species::FiG(_) => SpeciesKind::FiG,
            Species::OiG(_) => SpeciesKind::OiG,
            Species::FiD(_) => SpeciesKind::FiD,
            Species::OiD(_) => SpeciesKind::OiD,
            Species::Vi(_) => SpeciesKind::Vi,
        }
    }

    pub fn group(&self) -> Option<&FiniteGroup> {
        match self {
            Species::FiG(g) | Species::OiG(g) => Some(g),
            _ => None,
        }
    }

    pub fn colors(&self) -> Option<u32> {
        match self {
            Species::FiD(d) | Species::OiD(d) => Some(*d),
            _ => None,
        }
    }

    pub fn q(&self) -> Option<u32> {
        match self {
            Species::Vi(q) => Some(*q),
            _ => None,
        }
    }

    /// `|hom(a, b)|` from the closed-form counts.
    pub fn hom_count(&self, a: usize, b: usize) -> u128 {
        if a > b {
            return 0;
        }
        let falling: u128 = (b - a + 1..=b).map(|i| i as u128).product();
        let binom = falling / (1..=a).map(|i| i as u128).product::<u128>();
        let pow = |base: u128, e: usize| base.pow(e as u32);
        match self {
            Species::Fi => falling,
            Species::Oi => binom,
            Species::FiG(g) => falling * pow(g.order() as u128, a),
            Species::OiG(g) => binom * pow(g.order() as u128, a),
            Species::FiD(d) => falling * pow(*d as u128, b - a),
            Species::OiD(d) => binom * pow(*d as u128, b - a),
            Species::Vi(q) => (0..a).map(|i| pow(*q as u128, b) - pow(*q as u128, i)).product(),
        }
    }

    /// `|Aut(x)|`.
    pub fn aut_order(&self, x: usize) -> u128 {
        self.hom_count(x, x)
    }

    /// Short human-readable name, e.g. `FI_G(C2)` or `VI(q=2)`.
    pub fn describe(&self) -> String {
        match self {
            Species::FiG(g) | Species::OiG(g) => format!("{}({})", self.kind(), g.name),
            Species::FiD(d) | Species::OiD(d) => format!("{}(d={d})", self.kind()),
            Species::Vi(q) => format!("VI(q={q})"),
            _ => self.kind().to_string(),
        }
    }

    pub fn params_json(&self) -> serde_json::Value {
        use serde_json::json;
        match self {
            Species::FiG(g) | Species::OiG(g) => json!({"group": {"name": g.name, "order": g.order(), "labels": g.labels}}),
            Species::FiD(d) | Species::OiD(d) => json!({"d": d}),
            Species::Vi(q) => json!({"q": q}),
            _ => json!({}),
        }
    }
}

impl fmt::Display for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(Species::Fi.hom_count(2, 3), 6);
        assert_eq!(Species::Oi.hom_count(2, 4), 6);
        assert_eq!(Species::Oi.hom_count(3, 2), 0);
        assert_eq!(Species::Vi(2).hom_count(2, 2), 6);
        assert_eq!(Species::Vi(2).aut_order(3), 168);
        assert_eq!(Species::FiD(2).hom_count(0, 3), 8);
        let c2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
        assert_eq!(Species::FiG(c2.clone()).aut_order(2), 8);
        assert_eq!(Species::OiG(c2).aut_order(2), 4);
    }

    #[test]
    fn parsing() {
        assert_eq!("fi_g".parse::<SpeciesKind>().unwrap(), SpeciesKind::FiG);
        assert!("xi".parse::<SpeciesKind>().is_err());
        assert!(Species::from_parts(SpeciesKind::FiG, None, None, None).is_err());
        assert!(Species::from_parts(SpeciesKind::FiD, None, Some(0), None).is_err());
        assert!(Species::from_parts(SpeciesKind::Vi, None, None, Some(4)).is_err());
        assert_eq!(Species::from_parts(SpeciesKind::Vi, None, None, Some(3)).unwrap(), Species::Vi(3));
    }
}
