use std::fmt;
use std::str::FromStr;

use super::report::{CheckReport, SuiteReport};
use super::{
    check_automatching, check_counterexample, check_lattice_matching, check_matching_property,
    sweep_corollary, sweep_hall, sweep_kemperman, sweep_olson, LabConfig, LatticeParams,
};
use crate::error::{Error, Result};
use crate::group::{catalog, GroupTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    Kemperman,
    Corollary,
    Olson,
    Automatching,
    MatchingProperty,
    Hall,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Kemperman,
        CheckKind::Corollary,
        CheckKind::Olson,
        CheckKind::Automatching,
        CheckKind::MatchingProperty,
        CheckKind::Hall,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Kemperman => "kemperman",
            CheckKind::Corollary => "corollary",
            CheckKind::Olson => "olson",
            CheckKind::Automatching => "automatching",
            CheckKind::MatchingProperty => "matching-property",
            CheckKind::Hall => "hall",
        }
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<Vec<CheckKind>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(CheckKind::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err(Error::InvalidParameter("no checks selected".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown check '{s}' (expected one of kemperman, corollary, olson, \
                     automatching, matching-property, hall, all)"
                ))
            })
    }
}

pub fn run_check(kind: CheckKind, g: &GroupTable, cfg: &LabConfig) -> Result<CheckReport> {
    let result = match kind {
        CheckKind::Kemperman => sweep_kemperman(g, cfg),
        CheckKind::Corollary => sweep_corollary(g, cfg),
        CheckKind::Olson => sweep_olson(g, cfg),
        CheckKind::Automatching => check_automatching(g, cfg),
        CheckKind::MatchingProperty => check_matching_property(g, cfg),
        CheckKind::Hall => sweep_hall(g, cfg),
    };
    // name the check that tripped a size limit
    result.map_err(|e| match e {
        Error::SizeLimit { actual, cap, .. } => Error::SizeLimit {
            what: kind.name().to_string(),
            actual,
            cap,
        },
        other => other,
    })
}

pub fn run_checks(g: &GroupTable, kinds: &[CheckKind], cfg: &LabConfig) -> Result<SuiteReport> {
    let reports = kinds
        .iter()
        .map(|&k| run_check(k, g, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport::new(reports))
}

/// Every check over the built-in catalog at desk scale, plus the lattice
/// runs in dimensions 1 to 3.
pub fn full_suite(cfg: &LabConfig) -> Result<SuiteReport> {
    let groups = catalog();
    let mut reports = Vec::new();
    let within = |n: usize, cap: usize| n <= cap;
    for entry in &groups {
        let g = &entry.group;
        let n = g.order();
        if within(n, cfg.caps.automatching_order) {
            reports.push(check_automatching(g, cfg)?);
        }
        if within(n, 12) {
            reports.push(check_matching_property(g, cfg)?);
        }
        reports.push(check_counterexample(g)?);
        if within(n, cfg.caps.exhaustive_sumset_order) {
            reports.push(sweep_kemperman(g, cfg)?);
        }
        if within(n, cfg.caps.corollary_order) {
            reports.push(sweep_corollary(g, cfg)?);
        }
        if within(n, 12) {
            reports.push(sweep_olson(g, cfg)?);
        }
        reports.push(sweep_hall(g, cfg)?);
    }
    for dim in 1..=3 {
        let params = LatticeParams {
            dim,
            ..LatticeParams::default()
        };
        reports.push(check_lattice_matching(&params, cfg)?);
    }
    Ok(SuiteReport::new(reports))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_cyclic;

    #[test]
    fn check_lists() {
        assert_eq!(CheckKind::parse_list("all").unwrap().len(), 6);
        assert_eq!(
            CheckKind::parse_list("hall, olson,hall").unwrap(),
            vec![CheckKind::Olson, CheckKind::Hall]
        );
        assert!(CheckKind::parse_list("bogus").is_err());
        assert!(CheckKind::parse_list("").is_err());
    }

    #[test]
    fn size_limit_names_the_check() {
        let c8 = make_cyclic(8).unwrap();
        match run_check(CheckKind::Corollary, &c8, &LabConfig::default()) {
            Err(Error::SizeLimit { what, actual, cap }) => {
                assert_eq!((what.as_str(), actual, cap), ("corollary", 8, 6));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn c5_all_checks_pass() {
        let c5 = make_cyclic(5).unwrap();
        let suite = run_checks(&c5, &CheckKind::ALL, &LabConfig::default()).unwrap();
        assert!(suite.all_passed(), "{}", suite.to_text());
        assert_eq!(suite.summary.passed, 6);
    }
}
