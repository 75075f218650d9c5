use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::corrections::{quadric_correction, ybar_correction, yhat_correction};
use super::{
    chern_numbers, derive_invariant_h2, khat_diamond, markman_assembly, og6_diamond, ybar_invariants, yhat_invariants,
    ChernReport, NamedConstants, OG6_B2, OG6_CHI_TOP, OG6_DIM,
};
use crate::error::{HodgeError, Result};
use crate::hodge::{solve_betti_dim6, BettiVector, HodgeDiamond};

/// One stage of the derivation, in execution order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stage {
    /// Monodromy-invariant Hodge numbers of the `K3^[3]`-type manifold Y.
    MonodromyInvariants,
    /// Blow-up of Y along the 256 projective spaces where the involution is
    /// undefined.
    IndeterminacyBlowup,
    /// Blow-up of Ȳ along the fixed locus of the lifted involution.
    FixedLocusBlowup,
    /// Passage to the quotient K̂ by the involution.
    Quotient,
    /// Contraction of the exceptional divisors over the 256 quadrics.
    QuadricContraction,
    /// Completion of the sixfold's diamond by Poincaré duality.
    DualityCompletion,
}

impl Stage {
    pub const ALL: [Stage; 6] = [
        Stage::MonodromyInvariants,
        Stage::IndeterminacyBlowup,
        Stage::FixedLocusBlowup,
        Stage::Quotient,
        Stage::QuadricContraction,
        Stage::DualityCompletion,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Stage::MonodromyInvariants => "monodromy-invariants",
            Stage::IndeterminacyBlowup => "indeterminacy-blowup",
            Stage::FixedLocusBlowup => "fixed-locus-blowup",
            Stage::Quotient => "quotient",
            Stage::QuadricContraction => "quadric-contraction",
            Stage::DualityCompletion => "duality-completion",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub stage: Stage,
    pub inputs: Vec<HodgeDiamond>,
    pub output: HodgeDiamond,
    /// Signed changes `(p, q, delta)` applied to the input table.
    pub corrections: Vec<(u32, u32, i64)>,
}

impl Serialize for TraceStep {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TraceStep", 3)?;
        s.serialize_field("lemma", self.stage.as_str())?;
        s.serialize_field("output", &self.output)?;
        s.serialize_field("corrections", &self.corrections)?;
        s.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct PipelineTrace {
    pub steps: Vec<TraceStep>,
}

impl PipelineTrace {
    pub fn step(&self, stage: Stage) -> Option<&TraceStep> {
        self.steps.iter().find(|s| s.stage == stage)
    }

    fn push(&mut self, stage: Stage, inputs: Vec<HodgeDiamond>, output: &HodgeDiamond, corrections: Vec<(u32, u32, i64)>) {
        self.steps.push(TraceStep { stage, inputs, output: output.clone(), corrections });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serialization is infallible")
    }
}

fn positive(d: &HodgeDiamond) -> Vec<(u32, u32, i64)> {
    d.truncate_weight(OG6_DIM).entries().map(|((p, q), v)| (p, q, v as i64)).collect()
}

fn negative(d: &HodgeDiamond) -> Vec<(u32, u32, i64)> {
    positive(d).into_iter().map(|(p, q, v)| (p, q, -v)).collect()
}

/// Inputs of the derivation. The defaults are the known second Betti number
/// and Euler characteristic of OG6.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineConfig {
    pub b2: i64,
    pub chi_top: i64,
    pub constants: NamedConstants,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig { b2: OG6_B2, chi_top: OG6_CHI_TOP, constants: NamedConstants::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineOutput {
    pub diamond: HodgeDiamond,
    pub betti: BettiVector,
    pub chern: ChernReport,
    pub trace: PipelineTrace,
}

/// Runs the whole derivation and cross-checks the Betti numbers against
/// Salamon's relation solved with `b2` and `chi_top`.
pub fn run_full_pipeline(config: PipelineConfig) -> Result<PipelineOutput> {
    let (b4, b6) = solve_betti_dim6(1, config.b2, config.chi_top)?;
    let constants = config.constants;
    let mut trace = PipelineTrace::default();

    let h2 = derive_invariant_h2(config.b2)?;
    let y_inv = markman_assembly(&h2)?.invariant_part();
    trace.push(Stage::MonodromyInvariants, vec![h2.invariant_part(), h2.anti_invariant_part()], &y_inv, Vec::new());

    let ybar = ybar_invariants(&y_inv, constants);
    trace.push(Stage::IndeterminacyBlowup, vec![y_inv], &ybar, positive(&ybar_correction(constants)));

    let yhat = yhat_invariants(&ybar, constants);
    trace.push(Stage::FixedLocusBlowup, vec![ybar], &yhat, positive(&yhat_correction(constants)));

    let khat = khat_diamond(&yhat);
    trace.push(Stage::Quotient, vec![yhat], &khat, Vec::new());

    let diamond = og6_diamond(&khat, constants)?;
    let lower = diamond.truncate_weight(OG6_DIM);
    trace.push(Stage::QuadricContraction, vec![khat], &lower, negative(&quadric_correction(constants)));
    trace.push(Stage::DualityCompletion, vec![lower], &diamond, Vec::new());

    let betti = diamond.betti()?;
    for (quantity, degree, expected) in [("b2", 2, config.b2 as u64), ("b4", 4, b4), ("b6", 6, b6)] {
        if betti.get(degree) != expected {
            return Err(HodgeError::CrossValidation { quantity, pipeline: betti.get(degree), independent: expected });
        }
    }
    let chern = chern_numbers(&diamond)?;
    Ok(PipelineOutput { diamond, betti, chern, trace })
}
