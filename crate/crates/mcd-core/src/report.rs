//! Serializable analysis documents assembled from the other modules.

use crate::cayley::{build_mixed, MixedCayleyParams};
use crate::classify::{
    check_not_max_lambda, check_not_super_lambda, detect_exceptional, gamma_label, FamilyLabel,
    GammaLabel, MaxLambdaVerdict, SuperLambdaVerdict,
};
use crate::connectivity::{
    annotate_atoms, atom_structure_checks, connectivity_report, lambda_atoms, AtomReport,
    ConnectivityReport, PropertyOutcome,
};
use crate::digraph::Sign;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParamsDocument {
    pub group: String,
    pub group_order: usize,
    pub s0: Vec<usize>,
    pub s1: Vec<usize>,
    pub t0: Vec<usize>,
    pub t1: Vec<usize>,
}

impl ParamsDocument {
    pub fn from_params(p: &MixedCayleyParams) -> Self {
        ParamsDocument {
            group: p.group.name.clone(),
            group_order: p.group.order,
            s0: p.s0.members.clone(),
            s1: p.s1.members.clone(),
            t0: p.t0.members.clone(),
            t1: p.t1.members.clone(),
        }
    }
}

/// Full analysis of one instance: construction facts, connectivity,
/// atoms (when within the exhaustive cap), and family labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub schema_version: u32,
    pub params: ParamsDocument,
    pub vertex_count: usize,
    pub arc_count: usize,
    pub connectivity: ConnectivityReport,
    /// Positive-sign atoms; absent above the exhaustive cap.
    pub atoms: Option<AtomReport>,
    pub atom_checks: Vec<PropertyOutcome>,
    pub gamma: Option<GammaLabel>,
    pub family_labels: Vec<FamilyLabel>,
}

/// Group-theoretic verdicts alone (no flow computation).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyDocument {
    pub schema_version: u32,
    pub params: ParamsDocument,
    pub delta: usize,
    pub max_lambda: MaxLambdaVerdict,
    pub super_lambda: SuperLambdaVerdict,
    pub family_labels: Vec<FamilyLabel>,
}

pub fn analyze(p: &MixedCayleyParams, atom_cap: usize) -> Result<AnalysisDocument> {
    let x = build_mixed(p)?;
    let connectivity = connectivity_report(&x, atom_cap)?;
    let atoms = if x.vertex_count <= atom_cap.min(63) {
        let mut report = lambda_atoms(&x, Sign::Positive, atom_cap)?;
        annotate_atoms(p, &x, &mut report);
        Some(report)
    } else {
        None
    };
    let atom_checks = atoms
        .as_ref()
        .map(|r| atom_structure_checks(p, &x, r))
        .unwrap_or_default();
    let gamma = atoms.as_ref().and_then(|r| {
        if connectivity.is_max_lambda {
            None
        } else {
            gamma_label(p, r)
        }
    });
    Ok(AnalysisDocument {
        schema_version: SCHEMA_VERSION,
        params: ParamsDocument::from_params(p),
        vertex_count: x.vertex_count,
        arc_count: x.arc_count(),
        connectivity,
        atoms,
        atom_checks,
        gamma,
        family_labels: detect_exceptional(p)?,
    })
}

pub fn classify(p: &MixedCayleyParams, group_cap: usize) -> Result<ClassifyDocument> {
    let x = build_mixed(p)?;
    if !x.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let (deg, _) = x.degrees()?;
    let max_lambda = check_not_max_lambda(p, deg.delta, group_cap)?;
    let super_lambda = check_not_super_lambda(p, deg.delta, group_cap)?;
    Ok(ClassifyDocument {
        schema_version: SCHEMA_VERSION,
        params: ParamsDocument::from_params(p),
        delta: deg.delta,
        max_lambda,
        super_lambda,
        family_labels: detect_exceptional(p)?,
    })
}
