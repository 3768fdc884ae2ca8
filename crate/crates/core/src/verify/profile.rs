//! Named sweep profiles, read from TOML. The crate ships `default` and
//! `extended`; a user file with the same layout can replace them.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::classify::ClassifierId;
use crate::error::Error;
use crate::game::Variant;
use crate::region::Region;

pub const SHIPPED_PROFILES: &str = include_str!("../../data/profiles.toml");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub lemma: ClassifierId,
    pub variant: Variant,
    pub regions: Vec<Region>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub name: String,
    pub mismatch_cap: usize,
    pub sweeps: Vec<Sweep>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProfile {
    mismatch_cap: Option<usize>,
    #[serde(default)]
    sweep: Vec<RawSweep>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    lemma: String,
    variant: Option<String>,
    regions: Vec<String>,
}

impl Profile {
    /// Looks up `name` in `config`, or in the shipped profiles when `None`.
    pub fn load(name: &str, config: Option<&str>) -> Result<Profile, Error> {
        let text = config.unwrap_or(SHIPPED_PROFILES);
        let raw: BTreeMap<String, RawProfile> =
            toml::from_str(text).map_err(|e| Error::Profile(e.to_string()))?;
        let body = raw
            .get(name)
            .ok_or_else(|| Error::Profile(format!("no profile named {name:?}")))?;
        let mut sweeps = Vec::new();
        for s in &body.sweep {
            let lemma: ClassifierId = s.lemma.parse()?;
            let variant = match &s.variant {
                Some(v) => v.parse()?,
                None => lemma.default_variant(),
            };
            if !lemma.supports(variant) {
                return Err(Error::UnsupportedVariant { classifier: lemma.to_string(), variant: variant.to_string() });
            }
            let regions = s.regions.iter().map(|r| r.parse()).collect::<Result<_, _>>()?;
            sweeps.push(Sweep { lemma, variant, regions });
        }
        Ok(Profile {
            name: name.to_string(),
            mismatch_cap: body.mismatch_cap.unwrap_or(super::DEFAULT_MISMATCH_CAP),
            sweeps,
        })
    }

    pub fn sweeps_for(&self, lemma: ClassifierId) -> impl Iterator<Item = &Sweep> {
        self.sweeps.iter().filter(move |s| s.lemma == lemma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_profiles_load() {
        for name in ["default", "extended"] {
            let p = Profile::load(name, None).unwrap();
            assert!(!p.sweeps.is_empty());
            assert_eq!(p.mismatch_cap, 100);
        }
        let d = Profile::load("default", None).unwrap();
        for &id in ClassifierId::ALL {
            assert!(d.sweeps_for(id).next().is_some(), "{id} has no default sweep");
        }
    }

    #[test]
    fn custom_and_bad_profiles() {
        let text = "[quick]\n[[quick.sweep]]\nlemma = \"c_345\"\nregions = [\"piles:3:4\"]\n";
        let p = Profile::load("quick", Some(text)).unwrap();
        assert_eq!(p.sweeps[0].variant, Variant::C);
        assert!(Profile::load("missing", Some(text)).is_err());
        assert!(Profile::load("quick", Some("[quick]\nbogus = 1\n")).is_err());
        let wrong = "[q]\n[[q.sweep]]\nlemma = \"c_345\"\nvariant = \"B\"\nregions = []\n";
        assert!(Profile::load("q", Some(wrong)).is_err());
    }
}
