//! Enumeration harness: instance spaces over small groups, seeded
//! sampling, and the theorem-vs-direct crosscheck.

use mcd_core::cayley::{build_mixed, MixedCayleyParams};
use mcd_core::classify::{check_not_max_lambda, check_not_super_lambda};
use mcd_core::connectivity::{
    arc_connectivity, arc_connectivity_bruteforce, is_super_lambda, is_super_lambda_flow,
};
use mcd_core::error::Error;
use mcd_core::group::{ElementSet, Group, DEFAULT_GROUP_CAP};
use mcd_core::report::{ParamsDocument, SCHEMA_VERSION};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Brute-force oracle is compared against the flow route up to this
/// many vertices.
pub const ORACLE_VERTEX_CAP: usize = 16;
/// Exhaustive fragment scans run up to this many vertices; larger
/// instances fall back to the flow route.
pub const ATOM_VERTEX_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpaceSpec {
    pub groups: Vec<String>,
    pub s_max: usize,
    pub t_min: usize,
    pub t_max: usize,
    pub require_strong: bool,
    pub sample_limit: Option<usize>,
    pub seed: u64,
}

impl InstanceSpaceSpec {
    pub fn exhaustive(groups: &[&str], s_max: usize, t_max: usize) -> Self {
        InstanceSpaceSpec {
            groups: groups.iter().map(|s| s.to_string()).collect(),
            s_max,
            t_min: 1,
            t_max,
            require_strong: true,
            sample_limit: None,
            seed: 0,
        }
    }
}

/// All subsets of `0..n` with `min ≤ size ≤ max`, in increasing
/// bitmask order. `skip_identity` removes element 0 from the universe.
fn subset_options(n: usize, min: usize, max: usize, skip_identity: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u64..1 << n {
        if skip_identity && mask & 1 == 1 {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size < min || size > max {
            continue;
        }
        out.push((0..n).filter(|v| mask >> v & 1 == 1).collect());
    }
    out
}

/// The full instance list for one group, in lexicographic bitmask
/// order of (S₀, S₁, T₀, T₁); seeded sampling without replacement
/// when the spec has a sample limit.
pub fn instances_for_group(group: &Group, spec: &InstanceSpaceSpec) -> Vec<MixedCayleyParams> {
    let n = group.order;
    let s_opts = subset_options(n, 0, spec.s_max, true);
    let t_opts = subset_options(n, spec.t_min, spec.t_max, false);
    let total = s_opts.len() * s_opts.len() * t_opts.len() * t_opts.len();
    let make = |index: usize| -> MixedCayleyParams {
        let t1 = index % t_opts.len();
        let rest = index / t_opts.len();
        let t0 = rest % t_opts.len();
        let rest = rest / t_opts.len();
        let s1 = rest % s_opts.len();
        let s0 = rest / s_opts.len();
        MixedCayleyParams::new(
            group.clone(),
            ElementSet::new(s_opts[s0].iter().copied(), n).unwrap(),
            ElementSet::new(s_opts[s1].iter().copied(), n).unwrap(),
            ElementSet::new(t_opts[t0].iter().copied(), n).unwrap(),
            ElementSet::new(t_opts[t1].iter().copied(), n).unwrap(),
        )
        .expect("enumerated sets are valid")
    };
    match spec.sample_limit {
        Some(limit) if limit < total => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            let mut indices = rand::seq::index::sample(&mut rng, total, limit).into_vec();
            indices.sort_unstable();
            indices.into_iter().map(make).collect()
        }
        _ => (0..total).map(make).collect(),
    }
}

pub fn enumerate_space(spec: &InstanceSpaceSpec) -> Result<Vec<MixedCayleyParams>, Error> {
    let mut out = Vec::new();
    for name in &spec.groups {
        let g = Group::parse_spec(name)?;
        out.extend(instances_for_group(&g, spec));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mismatch {
    pub params: ParamsDocument,
    pub predicate: String,
    pub direct: String,
    pub theorem: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CrosscheckCounters {
    pub instances_total: usize,
    pub instances_strong: usize,
    pub skips: usize,
    pub oracle_checked: usize,
    pub oracle_agreements: usize,
    pub max_lambda_checked: usize,
    pub max_lambda_agreements: usize,
    pub super_lambda_checked: usize,
    pub super_lambda_agreements: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckResult {
    pub schema_version: u32,
    pub space: InstanceSpaceSpec,
    pub counters: CrosscheckCounters,
    pub mismatches: Vec<Mismatch>,
    pub findings: Vec<String>,
}

#[derive(Debug, Default)]
struct InstanceOutcome {
    counters: CrosscheckCounters,
    mismatches: Vec<Mismatch>,
    findings: Vec<String>,
}

fn check_instance(p: &MixedCayleyParams) -> InstanceOutcome {
    let mut out = InstanceOutcome::default();
    out.counters.instances_total = 1;
    let doc = ParamsDocument::from_params(p);
    let x = match build_mixed(p) {
        Ok(x) => x,
        Err(_) => {
            out.counters.skips = 1;
            return out;
        }
    };
    if !x.is_strongly_connected() {
        return out;
    }
    out.counters.instances_strong = 1;
    let (deg, _) = x.degrees().expect("nonempty");
    let (lambda, _) = match arc_connectivity(&x) {
        Ok(v) => v,
        Err(_) => {
            out.counters.skips = 1;
            return out;
        }
    };

    if x.vertex_count <= ORACLE_VERTEX_CAP {
        out.counters.oracle_checked = 1;
        match arc_connectivity_bruteforce(&x, ORACLE_VERTEX_CAP) {
            Ok(l) if l == lambda => out.counters.oracle_agreements = 1,
            Ok(l) => out.mismatches.push(Mismatch {
                params: doc.clone(),
                predicate: "lambda_oracle".into(),
                direct: lambda.to_string(),
                theorem: l.to_string(),
            }),
            Err(_) => out.counters.skips = 1,
        }
    }

    let not_max_direct = lambda < deg.delta;
    match check_not_max_lambda(p, deg.delta, DEFAULT_GROUP_CAP) {
        Ok(v) => {
            out.counters.max_lambda_checked = 1;
            if v.not_max_lambda == not_max_direct {
                out.counters.max_lambda_agreements = 1;
            } else {
                out.mismatches.push(Mismatch {
                    params: doc.clone(),
                    predicate: "not_max_lambda".into(),
                    direct: not_max_direct.to_string(),
                    theorem: v.not_max_lambda.to_string(),
                });
            }
        }
        Err(_) => out.counters.skips = 1,
    }

    if not_max_direct || x.vertex_count < 4 {
        return out;
    }
    let verdict = match check_not_super_lambda(p, deg.delta, DEFAULT_GROUP_CAP) {
        Ok(v) => v,
        Err(_) => {
            out.counters.skips = 1;
            return out;
        }
    };
    if !verdict.applicable {
        return out;
    }
    let direct = if x.vertex_count <= ATOM_VERTEX_CAP {
        is_super_lambda(&x, ATOM_VERTEX_CAP)
    } else {
        is_super_lambda_flow(&x)
    };
    match direct {
        Ok((is_super, _)) => {
            out.counters.super_lambda_checked = 1;
            if verdict.not_super_lambda == !is_super {
                out.counters.super_lambda_agreements = 1;
            } else {
                out.mismatches.push(Mismatch {
                    params: doc,
                    predicate: "not_super_lambda".into(),
                    direct: (!is_super).to_string(),
                    theorem: verdict.not_super_lambda.to_string(),
                });
            }
        }
        Err(_) => out.counters.skips = 1,
    }
    out
}

fn add(a: &mut CrosscheckCounters, b: &CrosscheckCounters) {
    a.instances_total += b.instances_total;
    a.instances_strong += b.instances_strong;
    a.skips += b.skips;
    a.oracle_checked += b.oracle_checked;
    a.oracle_agreements += b.oracle_agreements;
    a.max_lambda_checked += b.max_lambda_checked;
    a.max_lambda_agreements += b.max_lambda_agreements;
    a.super_lambda_checked += b.super_lambda_checked;
    a.super_lambda_agreements += b.super_lambda_agreements;
}

/// Runs the crosscheck over a whole space. Instances are independent
/// work items; the reduction is order-independent and the mismatch
/// list sorted, so identical invocations produce identical results.
pub fn crosscheck(spec: &InstanceSpaceSpec) -> Result<CrosscheckResult, Error> {
    let instances = enumerate_space(spec)?;
    let outcomes: Vec<InstanceOutcome> = instances.par_iter().map(check_instance).collect();
    let mut counters = CrosscheckCounters::default();
    let mut mismatches = Vec::new();
    let mut findings = Vec::new();
    for o in outcomes {
        add(&mut counters, &o.counters);
        mismatches.extend(o.mismatches);
        findings.extend(o.findings);
    }
    mismatches.sort();
    findings.sort();
    Ok(CrosscheckResult {
        schema_version: SCHEMA_VERSION,
        space: spec.clone(),
        counters,
        mismatches,
        findings,
    })
}

/// Parses a comma-separated element list; `none` is the empty set.
pub fn parse_element_list(input: &str) -> Result<Vec<usize>, String> {
    let trimmed = input.trim();
    if trimmed == "none" {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid element index `{tok}`"))
        })
        .collect()
}

pub fn params_from_cli(
    group: &str,
    s0: &str,
    s1: &str,
    t0: &str,
    t1: &str,
) -> Result<MixedCayleyParams, String> {
    let g = Group::parse_spec(group).map_err(|e| e.to_string())?;
    let n = g.order;
    let set = |input: &str| -> Result<ElementSet, String> {
        ElementSet::new(parse_element_list(input)?, n).map_err(|e| e.to_string())
    };
    MixedCayleyParams::new(g, set(s0)?, set(s1)?, set(t0)?, set(t1)?).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_list_syntax() {
        assert_eq!(parse_element_list("none").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_element_list("0,1, 2").unwrap(), vec![0, 1, 2]);
        assert!(parse_element_list("a").is_err());
    }

    #[test]
    fn enumeration_counts() {
        let spec = InstanceSpaceSpec::exhaustive(&["Z2"], 2, 2);
        let g = Group::cyclic(2).unwrap();
        // S options: {}, {1}; T options: {0}, {1}, {0,1}.
        assert_eq!(instances_for_group(&g, &spec).len(), 2 * 2 * 3 * 3);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let spec = InstanceSpaceSpec::exhaustive(&["Z2"], 2, 2);
        let g = Group::cyclic(2).unwrap();
        let all = instances_for_group(&g, &spec);
        assert!(all[0].s0.is_empty() && all[0].s1.is_empty());
        assert_eq!(all[0].t0.members, vec![0]);
        assert_eq!(all[0].t1.members, vec![0]);
        assert_eq!(all[1].t1.members, vec![1]);
    }

    #[test]
    fn sampling_is_reproducible() {
        let mut spec = InstanceSpaceSpec::exhaustive(&["Z4"], 2, 2);
        spec.sample_limit = Some(50);
        spec.seed = 7;
        let g = Group::cyclic(4).unwrap();
        let a = instances_for_group(&g, &spec);
        let b = instances_for_group(&g, &spec);
        assert_eq!(a.len(), 50);
        assert_eq!(a, b);
        spec.seed = 8;
        assert_ne!(instances_for_group(&g, &spec), a);
    }

    #[test]
    fn crosscheck_on_single_instance_space() {
        // A space that contains a known not-max-λ instance.
        let spec = InstanceSpaceSpec::exhaustive(&["Z2"], 1, 1);
        let result = crosscheck(&spec).unwrap();
        assert!(result.mismatches.is_empty());
        assert_eq!(
            result.counters.max_lambda_checked,
            result.counters.max_lambda_agreements
        );
        assert!(result.counters.instances_strong > 0);
    }

    #[test]
    fn empty_space_is_clean() {
        let spec = InstanceSpaceSpec::exhaustive(&[], 2, 2);
        let result = crosscheck(&spec).unwrap();
        assert_eq!(result.counters.instances_total, 0);
        assert!(result.mismatches.is_empty());
    }
}
