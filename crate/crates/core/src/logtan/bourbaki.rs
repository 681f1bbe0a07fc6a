use serde::{Deserialize, Serialize};

use super::invariants::Analysis;
use crate::error::LogtanError;
use crate::groebner::{GradedFreeModule, GradedMap, Ideal, ModuleElement};
use crate::hilbert::{hilbert_polynomial_linear, hilbert_series_ideal};
use crate::homology::{
    betti_table, minimal_free_resolution, minimal_presentation, module_dual, verify_lifting, BettiTable, LiftingCheck,
    ModuleInput,
};

/// The Bourbaki curve attached to a minimal-degree section `ν` of `T_σ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BourbakiData {
    /// Index of `ν` among the minimal generators of `T_σ`.
    pub choice: usize,
    pub nu: Vec<String>,
    pub nu_degree: i64,
    /// Reduced Gröbner basis of the saturated ideal `I_B`.
    pub ideal: Vec<String>,
    pub deg_b: i64,
    pub p_a: i64,
    pub complete_intersection: bool,
    pub betti: BettiTable,
    pub lifting: LiftingCheck,
}

/// Indices of the minimal-degree generators of `T_σ`, in generator order.
pub fn minimal_degree_choices(analysis: &Analysis) -> Vec<usize> {
    let e = analysis.report.e;
    analysis.betti.degrees(0).iter().enumerate().filter(|(_, &a)| a == e).map(|(i, _)| i).collect()
}

/// Bourbaki data for the first minimal-degree generator; `None` for free sequences.
pub fn bourbaki(analysis: &Analysis) -> Result<Option<BourbakiData>, LogtanError> {
    if analysis.report.flags.free {
        return Ok(None);
    }
    bourbaki_with_choice(analysis, minimal_degree_choices(analysis)[0]).map(Some)
}

/// Bourbaki data for the generator at `choice`, which must have degree `e`.
pub fn bourbaki_with_choice(analysis: &Analysis, choice: usize) -> Result<BourbakiData, LogtanError> {
    let report = &analysis.report;
    let fail = |msg: String| LogtanError::BourbakiFailed(msg);
    if report.flags.free {
        return Err(fail("the sequence is free, so there is no Bourbaki curve".into()));
    }
    let (e, d) = (report.e, report.d);
    if analysis.betti.degrees(0).get(choice) != Some(&e) {
        return Err(fail(format!("generator {choice} does not have the minimal degree {e}")));
    }
    let ring = analysis.sequence.ring();
    let gens = analysis.resolution.augmentation().expect("T_σ is resolved as a submodule").columns();
    let f0 = analysis.resolution.modules()[0].clone();

    // C = T / (ν), presented by the relations of T together with e_ν.
    let mut twists = analysis.resolution.modules().get(1).map_or(Vec::new(), |f| f.twists().to_vec());
    let mut columns: Vec<ModuleElement> =
        analysis.resolution.differential(1).map_or(Vec::new(), |d1| d1.columns().to_vec());
    twists.push(e);
    columns.push(f0.basis_element(choice));
    let relations = GradedMap::new(GradedFreeModule::new(ring, twists), f0, columns)?;
    let presentation = minimal_presentation(&relations)?;

    let dual = module_dual(&presentation);
    if dual.len() != 1 || dual.degrees() != vec![e - d] {
        return Err(fail(format!(
            "Hom(T/ν, R) should be free of rank 1 generated in degree {}, found generators in degrees {:?}",
            e - d,
            dual.degrees()
        )));
    }
    let psi = &dual.generators()[0];
    let ideal = Ideal::new(ring, psi.entries().to_vec())?.saturate()?;
    if ideal.is_unit() || ideal.is_zero() {
        return Err(fail(format!("the dual section cuts out {ideal}")));
    }
    let (deg_b, b) = hilbert_polynomial_linear(&hilbert_series_ideal(&ideal))?;
    let p_a = 1 - b;
    if deg_b != report.bour {
        return Err(LogtanError::Inconsistent(format!("deg B = {deg_b} but Bour = {}", report.bour)));
    }
    let predicted_c3 = 2 * p_a - 2 + deg_b * (4 + d - 2 * e);
    if predicted_c3 != report.c3 {
        return Err(LogtanError::Inconsistent(format!(
            "2 p_a - 2 + deg B (4 + d - 2e) = {predicted_c3} but c3 = {}",
            report.c3
        )));
    }

    let res_b = minimal_free_resolution(ModuleInput::Submodule(ideal.as_submodule()))?;
    let betti = betti_table(&res_b)?;
    let complete_intersection =
        betti.length() == 1 && betti.rank(0) == 2 && betti.degrees(1) == [betti.degrees(0)[0] + betti.degrees(0)[1]];
    let lifting = verify_lifting(&analysis.betti, Some(&betti), e, d)?;

    Ok(BourbakiData {
        choice,
        nu: gens[choice].entries().iter().map(|p| p.to_string()).collect(),
        nu_degree: e,
        ideal: ideal.groebner_basis().iter().map(|p| p.to_string()).collect(),
        deg_b,
        p_a,
        complete_intersection,
        betti,
        lifting,
    })
}
