//! JSON report types. Reals are rounded to 12 significant digits; magnitudes
//! below `1e-13` are rendered as zero.

use pdrkit_core::pdr::{Classification, PartitionWitness, PdrVertexReport};
use pdrkit_core::predistance::{LevelNumbers, PredistanceSystem};
use pdrkit_core::spectral::{LocalSpectrum, SpectralDecomposition};
use pdrkit_core::Tolerances64;
use serde::{Serialize, Serializer};

/// A real rendered with 12 significant digits.
#[derive(Debug, Clone, Copy)]
pub struct R12(pub f64);

impl Serialize for R12 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(round12(self.0))
    }
}

const ZERO_FLOOR: f64 = 1e-13;

pub fn round12(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    if x.abs() < ZERO_FLOOR {
        return 0.0;
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn reals(xs: &[f64]) -> Vec<R12> {
    xs.iter().copied().map(R12).collect()
}

/// Integer when within 1e-6 of one, otherwise the raw real.
#[derive(Debug, Clone, Copy, Serialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Real(R12),
}

impl From<f64> for Number {
    fn from(x: f64) -> Self {
        let r = x.round();
        if (x - r).abs() <= 1e-6 && r.abs() < 9e15 {
            Number::Int(r as i64)
        } else {
            Number::Real(R12(x))
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EigenEntry {
    pub eigenvalue: R12,
    pub multiplicity: usize,
}

pub fn spectrum(dec: &SpectralDecomposition<f64>) -> Vec<EigenEntry> {
    dec.eigenvalues
        .iter()
        .zip(&dec.multiplicities)
        .map(|(&x, &m)| EigenEntry { eigenvalue: R12(x), multiplicity: m })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct ToleranceReport {
    pub eps_group: R12,
    pub eps_mult: R12,
    pub eps_num: R12,
    pub eps_pdr: R12,
    pub eps_walk: R12,
    pub eps_orth: R12,
    pub eps_perron: R12,
    pub walk_cap: u32,
}

impl From<&Tolerances64> for ToleranceReport {
    fn from(t: &Tolerances64) -> Self {
        ToleranceReport {
            eps_group: R12(t.group),
            eps_mult: R12(t.mult),
            eps_num: R12(t.num),
            eps_pdr: R12(t.pdr),
            eps_walk: R12(t.walk),
            eps_orth: R12(t.orth),
            eps_perron: R12(t.perron),
            walk_cap: t.walk_cap,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LevelReport {
    pub c: Vec<Number>,
    pub a: Vec<Number>,
    pub b: Vec<Number>,
}

impl LevelReport {
    fn new(levels: &[LevelNumbers<f64>]) -> Self {
        LevelReport {
            c: levels.iter().map(|l| l.c.into()).collect(),
            a: levels.iter().map(|l| l.a.into()).collect(),
            b: levels.iter().map(|l| l.b.into()).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WitnessReport {
    pub level: usize,
    pub target: usize,
    pub vertices: [usize; 2],
    pub values: [R12; 2],
}

impl From<&PartitionWitness<f64>> for WitnessReport {
    fn from(w: &PartitionWitness<f64>) -> Self {
        WitnessReport {
            level: w.cell,
            target: w.target,
            vertices: [w.first, w.second],
            values: [R12(w.first_value), R12(w.second_value)],
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VertexReport {
    pub vertex: usize,
    pub d_u: usize,
    pub ecc: usize,
    pub extremal: bool,
    pub local_mults: Vec<R12>,
    pub is_pdr: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersection_numbers: Option<LevelReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

impl From<&PdrVertexReport<f64>> for VertexReport {
    fn from(r: &PdrVertexReport<f64>) -> Self {
        VertexReport {
            vertex: r.vertex,
            d_u: r.d_u,
            ecc: r.ecc,
            extremal: r.extremal,
            local_mults: reals(&r.local.local_mults),
            is_pdr: r.is_pdr,
            intersection_numbers: r.levels().map(LevelReport::new),
            witness: r.witness.as_ref().map(WitnessReport::from),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PartReport {
    pub vertices: Vec<usize>,
    pub degree: usize,
    pub array: String,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub alpha: R12,
    pub alpha_expected: R12,
}

#[derive(Debug, Serialize)]
pub struct NotPdrReport {
    pub vertex: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<WitnessReport>,
}

#[derive(Debug, Serialize)]
pub struct ClassificationReport {
    pub verdict: &'static str,
    pub intersection_arrays: Vec<PartReport>,
    pub alpha_levels: Vec<R12>,
    pub walk_regularity: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<NotPdrReport>,
}

impl From<&Classification<f64>> for ClassificationReport {
    fn from(c: &Classification<f64>) -> Self {
        ClassificationReport {
            verdict: c.verdict.as_str(),
            intersection_arrays: c
                .parts
                .iter()
                .map(|p| PartReport {
                    vertices: p.vertices.clone(),
                    degree: p.degree,
                    array: p.array.to_string(),
                    b: p.array.b.clone(),
                    c: p.array.c.clone(),
                    alpha: R12(p.alpha),
                    alpha_expected: R12(p.alpha_expected),
                })
                .collect(),
            alpha_levels: reals(&c.alpha_levels),
            walk_regularity: c.walk_regularity.as_str(),
            witness: c.witness.as_ref().map(|w| NotPdrReport {
                vertex: w.vertex,
                partition: w.partition.as_ref().map(WitnessReport::from),
            }),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub named: Option<String>,
    pub n: usize,
    pub edge_count: usize,
    pub spectrum: Vec<EigenEntry>,
    pub perron: Vec<R12>,
    pub per_vertex: Vec<VertexReport>,
    pub classification: ClassificationReport,
    pub tolerances: ToleranceReport,
}

impl AnalysisReport {
    pub fn new(input: String, named: Option<String>, edge_count: usize, c: &Classification<f64>, tol: &Tolerances64) -> Self {
        let dec = &c.decomposition;
        AnalysisReport {
            input,
            named,
            n: dec.n(),
            edge_count,
            spectrum: spectrum(dec),
            perron: reals(&dec.perron),
            per_vertex: c.reports.iter().map(VertexReport::from).collect(),
            classification: c.into(),
            tolerances: tol.into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PolynomialReport {
    pub degree: usize,
    pub coeffs: Vec<R12>,
    pub value_at_lambda0: R12,
    pub norm_sq: R12,
}

#[derive(Debug, Serialize)]
pub struct RecurrenceReport {
    pub b_prev: R12,
    pub a: R12,
    pub c_next: R12,
}

#[derive(Debug, Serialize)]
pub struct LocalReport {
    pub vertex: usize,
    pub d_u: usize,
    pub local_mults: Vec<R12>,
    pub values: Vec<R12>,
    pub predistance: Vec<PolynomialReport>,
    pub recurrence: Vec<RecurrenceReport>,
}

impl LocalReport {
    pub fn new(ls: &LocalSpectrum<f64>, sys: &PredistanceSystem<f64>) -> Self {
        LocalReport {
            vertex: ls.vertex,
            d_u: ls.d_u(),
            local_mults: reals(&ls.local_mults),
            values: reals(&ls.values()),
            predistance: sys
                .polys
                .iter()
                .enumerate()
                .map(|(i, p)| PolynomialReport {
                    degree: p.degree(),
                    coeffs: reals(p.coeffs()),
                    value_at_lambda0: R12(sys.values_at_lambda0[i]),
                    norm_sq: R12(sys.norms_sq[i]),
                })
                .collect(),
            recurrence: sys
                .recurrence
                .iter()
                .map(|r| RecurrenceReport { b_prev: R12(r.b_prev), a: R12(r.a), c_next: R12(r.c_next) })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SpectrumReport {
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub named: Option<String>,
    pub n: usize,
    pub spectrum: Vec<EigenEntry>,
    pub perron: Vec<R12>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local: Option<LocalReport>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[allow(clippy::approx_constant)]
    fn twelve_digits() {
        assert_eq!(round12(2.0f64.sqrt()), 1.41421356237);
        assert_eq!(round12(-0.0), 0.0);
        assert_eq!(round12(8.6e-17), 0.0);
        assert_eq!(round12(1e-9), 1e-9);
        assert_eq!(round12(2.9999999999999996), 3.0);
        assert_eq!(serde_json::to_string(&R12(0.1 + 0.2)).unwrap(), "0.3");
        assert_eq!(serde_json::to_string(&R12(1.0 / 3.0)).unwrap(), "0.333333333333");
    }

    #[test]
    fn near_integers_collapse() {
        assert_eq!(serde_json::to_string(&Number::from(2.0000000001)).unwrap(), "2");
        assert_eq!(serde_json::to_string(&Number::from(1.5)).unwrap(), "1.5");
    }
}
