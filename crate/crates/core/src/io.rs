//! The group wire format: `{"name", "degree", "generators"}` with 0-based
//! image arrays. This is the only on-disk representation of groups.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::Result;
use crate::group::Group;
use crate::perm::Perm;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

impl GroupFile {
    pub fn from_group(name: &str, g: &Group) -> GroupFile {
        GroupFile {
            name: name.to_string(),
            degree: g.degree(),
            generators: g
                .generators()
                .iter()
                .map(|p| p.images().to_vec())
                .collect(),
        }
    }

    pub fn to_group(&self, cfg: &Config) -> Result<Group> {
        let gens = self
            .generators
            .iter()
            .map(|imgs| {
                if imgs.len() != self.degree {
                    return Err(crate::error::Error::DegreeMismatch {
                        left: imgs.len(),
                        right: self.degree,
                    });
                }
                Perm::new(imgs.clone())
            })
            .collect::<Result<Vec<Perm>>>()?;
        Group::from_generators(self.degree, gens, cfg)
    }
}

pub fn load_group(path: &Path, cfg: &Config) -> Result<(String, Group)> {
    let text = std::fs::read_to_string(path)?;
    let gf: GroupFile = serde_json::from_str(&text)?;
    let g = gf.to_group(cfg)?;
    Ok((gf.name, g))
}

pub fn save_group(path: &Path, name: &str, g: &Group) -> Result<()> {
    let gf = GroupFile::from_group(name, g);
    let mut text = serde_json::to_string_pretty(&gf)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let cfg = Config::default();
        let g = Group::from_generators(
            4,
            vec![
                Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
                Perm::from_cycles(4, &[vec![0, 1]]).unwrap(),
            ],
            &cfg,
        )
        .unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s4.json");
        save_group(&path, "S4", &g).unwrap();
        let (name, back) = load_group(&path, &cfg).unwrap();
        assert_eq!(name, "S4");
        assert_eq!(back.order(), 24);
        assert!(back.same_subgroup(&g));
    }

    #[test]
    fn malformed_rejected() {
        let cfg = Config::default();
        let gf = GroupFile {
            name: "bad".into(),
            degree: 3,
            generators: vec![vec![0, 0, 1]],
        };
        assert!(gf.to_group(&cfg).is_err());
        let gf = GroupFile {
            name: "bad".into(),
            degree: 3,
            generators: vec![vec![0, 1]],
        };
        assert!(gf.to_group(&cfg).is_err());
    }
}
