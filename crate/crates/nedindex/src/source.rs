//! Graph sources and range syntax shared by the CLI subcommands.

use std::fs::File;
use std::io::BufReader;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use nedindex_core::{datasets, generators, Graph};

use crate::error::{Error, Result};
use crate::io::load_edge_list;

/// `complete:N`, `wheel:N`, `figure2`, `figure3`, `gnm:N:M[:SEED]` or
/// `er:N:P[:SEED]`.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Complete(usize),
    Wheel(usize),
    Figure2,
    Figure3,
    Gnm { n: usize, m: usize, seed: u64 },
    ErdosRenyi { n: usize, p: f64, seed: u64 },
}

fn field<T: FromStr>(spec: &str, value: Option<&str>) -> Result<T> {
    value
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::Config(format!("malformed generator spec {spec:?}")))
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let mut parts = spec.split(':');
        let kind = parts.next().unwrap_or_default();
        let parsed = match kind {
            "complete" => GeneratorSpec::Complete(field(spec, parts.next())?),
            "wheel" => GeneratorSpec::Wheel(field(spec, parts.next())?),
            "figure2" => GeneratorSpec::Figure2,
            "figure3" => GeneratorSpec::Figure3,
            "gnm" => GeneratorSpec::Gnm {
                n: field(spec, parts.next())?,
                m: field(spec, parts.next())?,
                seed: parts.next().map_or(Ok(0), |s| field(spec, Some(s)))?,
            },
            "er" => GeneratorSpec::ErdosRenyi {
                n: field(spec, parts.next())?,
                p: field(spec, parts.next())?,
                seed: parts.next().map_or(Ok(0), |s| field(spec, Some(s)))?,
            },
            _ => return Err(Error::Config(format!("unknown generator {kind:?}"))),
        };
        if parts.next().is_some() {
            return Err(Error::Config(format!("malformed generator spec {spec:?}")));
        }
        Ok(parsed)
    }
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Graph> {
        Ok(match *self {
            GeneratorSpec::Complete(n) => generators::complete(n)?,
            GeneratorSpec::Wheel(n) => generators::wheel(n)?,
            GeneratorSpec::Figure2 => generators::figure2(),
            GeneratorSpec::Figure3 => generators::figure3(),
            GeneratorSpec::Gnm { n, m, seed } => generators::gnm(n, m, seed),
            GeneratorSpec::ErdosRenyi { n, p, seed } => generators::erdos_renyi(n, p, seed),
        })
    }
}

/// Embedded datasets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dataset {
    Karate,
}

impl Dataset {
    pub const ALL: [Dataset; 1] = [Dataset::Karate];

    pub fn name(self) -> &'static str {
        match self {
            Dataset::Karate => "karate",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Dataset::Karate => "Zachary karate club, 34 vertices, 78 edges, two-faction ground truth",
        }
    }

    pub fn graph(self) -> Graph {
        match self {
            Dataset::Karate => datasets::karate_club(),
        }
    }
}

impl FromStr for Dataset {
    type Err = Error;

    fn from_str(name: &str) -> Result<Self> {
        Dataset::ALL
            .into_iter()
            .find(|d| d.name() == name)
            .ok_or_else(|| Error::Config(format!("unknown dataset {name:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    File(PathBuf),
    Generate(GeneratorSpec),
    Dataset(Dataset),
}

impl GraphSource {
    pub fn load(&self) -> Result<Graph> {
        match self {
            GraphSource::File(path) => load_edge_list(BufReader::new(File::open(path)?)),
            GraphSource::Generate(spec) => spec.generate(),
            GraphSource::Dataset(d) => Ok(d.graph()),
        }
    }
}

/// `a..b` (inclusive) or a single `k`.
pub fn parse_k_range(text: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Config(format!("invalid k range {text:?}, expected a..b or k"));
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?),
        None => {
            let k = text.trim().parse().map_err(|_| bad())?;
            (k, k)
        }
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_ranges() {
        assert_eq!(parse_k_range("1..34").unwrap(), 1..=34);
        assert_eq!(parse_k_range("7").unwrap(), 7..=7);
        for bad in ["", "0..3", "5..2", "a..b", "1..", "1...3"] {
            assert!(parse_k_range(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn generator_specs() {
        assert_eq!("complete:8".parse::<GeneratorSpec>().unwrap(), GeneratorSpec::Complete(8));
        assert_eq!("wheel:7".parse::<GeneratorSpec>().unwrap().generate().unwrap().edge_count(), 12);
        assert_eq!(
            "gnm:10:20".parse::<GeneratorSpec>().unwrap(),
            GeneratorSpec::Gnm { n: 10, m: 20, seed: 0 }
        );
        assert_eq!("figure2".parse::<GeneratorSpec>().unwrap().generate().unwrap().edge_count(), 21);
        for bad in ["complete", "complete:x", "wheel:4:2", "figure2:1", "star:5"] {
            assert!(bad.parse::<GeneratorSpec>().is_err(), "{bad}");
        }
        assert!("wheel:3".parse::<GeneratorSpec>().unwrap().generate().is_err());
    }

    #[test]
    fn datasets_by_name() {
        let d: Dataset = "karate".parse().unwrap();
        assert_eq!(d.graph().edge_count(), 78);
        assert!("facebook".parse::<Dataset>().is_err());
    }
}
