use rayon::prelude::*;

use super::{is_pdr_around, weighted_column, max_abs_diff, PartitionWitness, PdrVertexReport};
use crate::error::{Error, Result};
use crate::graph::{bipartition, distance_regularity, Graph, IntersectionArray};
use crate::predistance::apply_poly_column;
use crate::scalar::{count, Real, Tolerances};
use crate::spectral::{decompose, SpectralDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    DistanceRegular,
    DistanceBiregular,
    NotPdr,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::DistanceRegular => "distance_regular",
            Verdict::DistanceBiregular => "distance_biregular",
            Verdict::NotPdr => "not_pdr",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkRegularity {
    WalkRegular,
    WalkBiregular,
    Neither,
}

impl WalkRegularity {
    pub fn as_str(self) -> &'static str {
        match self {
            WalkRegularity::WalkRegular => "walk_regular",
            WalkRegularity::WalkBiregular => "walk_biregular",
            WalkRegularity::Neither => "neither",
        }
    }
}

/// A vertex class sharing one intersection array: the whole vertex set for
/// distance-regular graphs, one side of the bipartition otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct PartArray<T> {
    pub vertices: Vec<usize>,
    pub degree: usize,
    pub array: IntersectionArray,
    /// Common Perron entry on the part.
    pub alpha: T,
    /// Closed-form Perron entry for the part: 1 when regular, otherwise
    /// `sqrt((δ + δ') / (2 δ'))` with `δ` the part's degree and `δ'` the other's.
    pub alpha_expected: T,
}

#[derive(Debug, Clone)]
pub struct NotPdrWitness<T> {
    pub vertex: usize,
    pub partition: Option<PartitionWitness<T>>,
}

#[derive(Debug, Clone)]
pub struct Classification<T> {
    pub verdict: Verdict,
    pub parts: Vec<PartArray<T>>,
    pub alpha_levels: Vec<T>,
    pub witness: Option<NotPdrWitness<T>>,
    pub walk_regularity: WalkRegularity,
    pub decomposition: SpectralDecomposition<T>,
    pub reports: Vec<PdrVertexReport<T>>,
}

pub fn classify<T: Real>(g: &Graph, tol: &Tolerances<T>) -> Result<Classification<T>> {
    let dec = decompose(g, tol)?;
    classify_with(g, dec, tol)
}

/// Like [`classify`] with a precomputed decomposition.
pub fn classify_with<T: Real>(g: &Graph, dec: SpectralDecomposition<T>, tol: &Tolerances<T>) -> Result<Classification<T>> {
    let reports = (0..g.n())
        .into_par_iter()
        .map(|u| is_pdr_around(g, &dec, u, tol))
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let bip = bipartition(g)?;
    let walk_regularity = walk_regularity(&reports, bip.as_ref().map(|b| &b.parts), tol);

    if let Some(r) = reports.iter().find(|r| !r.is_pdr) {
        let witness = NotPdrWitness { vertex: r.vertex, partition: r.witness.clone() };
        return Ok(Classification {
            verdict: Verdict::NotPdr,
            parts: Vec::new(),
            alpha_levels: Vec::new(),
            witness: Some(witness),
            walk_regularity,
            decomposition: dec,
            reports,
        });
    }

    let (verdict, groups): (Verdict, Vec<(Vec<usize>, usize, T)>) = match g.regular_degree() {
        Some(k) => (Verdict::DistanceRegular, vec![((0..g.n()).collect(), k, T::one())]),
        None => {
            let bip = bip.ok_or_else(|| {
                Error::Inconsistent("pseudo-distance-regular everywhere, irregular and not bipartite".into())
            })?;
            let (d1, d2) = bip.biregular.ok_or_else(|| {
                Error::Inconsistent("pseudo-distance-regular everywhere, bipartite but not biregular".into())
            })?;
            let formula = |own: usize, other: usize| {
                ((count::<T>(own) + count::<T>(other)) / (count::<T>(2) * count::<T>(other))).sqrt()
            };
            let [p1, p2] = bip.parts;
            (Verdict::DistanceBiregular, vec![(p1, d1, formula(d1, d2)), (p2, d2, formula(d2, d1))])
        }
    };

    let mut parts = Vec::with_capacity(groups.len());
    for (vertices, degree, alpha_expected) in groups {
        parts.push(confirm_part(g, &dec, &reports, vertices, degree, alpha_expected, tol)?);
    }
    let alpha_levels = parts.iter().map(|p| p.alpha).collect();
    Ok(Classification {
        verdict,
        parts,
        alpha_levels,
        witness: None,
        walk_regularity,
        decomposition: dec,
        reports,
    })
}

/// Checks one vertex class of an all-PDR graph by counting: every distance
/// partition is regular with one shared array, the Perron entry is constant
/// and matches its closed form, and the predistance polynomials of the first
/// vertex reproduce the weighted distance columns of every vertex in the class.
fn confirm_part<T: Real>(
    g: &Graph,
    dec: &SpectralDecomposition<T>,
    reports: &[PdrVertexReport<T>],
    vertices: Vec<usize>,
    degree: usize,
    alpha_expected: T,
    tol: &Tolerances<T>,
) -> Result<PartArray<T>> {
    let reference = vertices[0];
    let mut array: Option<IntersectionArray> = None;
    for &u in &vertices {
        let levels = distance_regularity(g, &reports[u].distances).ok_or_else(|| {
            Error::Inconsistent(format!("vertex {u} is pseudo-distance-regular but its distance partition is not regular"))
        })?;
        let this = IntersectionArray::from_levels(&levels);
        match &array {
            None => array = Some(this),
            Some(a) if *a != this => {
                return Err(Error::Inconsistent(format!(
                    "vertices {reference} and {u} have different intersection arrays {a} and {this}"
                )))
            }
            Some(_) => {}
        }
    }

    let alpha = dec.perron[reference];
    for &u in &vertices {
        if (dec.perron[u] - alpha).abs() > tol.perron {
            return Err(Error::Inconsistent(format!("Perron entries of {reference} and {u} differ within a part")));
        }
    }
    if (alpha - alpha_expected).abs() > tol.perron {
        return Err(Error::Inconsistent(format!(
            "Perron entry {alpha} of vertex {reference} does not match the closed form {alpha_expected}"
        )));
    }

    let threshold = tol.pdr_threshold(dec.lambda0());
    let polys = &reports[reference].predistance.polys;
    for &u in &vertices {
        let info = &reports[u].distances;
        if info.ecc + 1 != polys.len() {
            return Err(Error::Inconsistent(format!("vertex {u} has eccentricity {} but d_u of {reference} is {}", info.ecc, polys.len() - 1)));
        }
        for (i, p) in polys.iter().enumerate() {
            let lhs = apply_poly_column(g, p, u)?;
            let rhs = weighted_column(dec, info, i)?;
            if max_abs_diff(&lhs, &rhs) > threshold {
                return Err(Error::Inconsistent(format!(
                    "predistance polynomial {i} of vertex {reference} does not give distance column {i} at {u}"
                )));
            }
        }
    }

    Ok(PartArray { vertices, degree, array: array.expect("parts are non-empty"), alpha, alpha_expected })
}

fn same_local_spectrum<T: Real>(a: &PdrVertexReport<T>, b: &PdrVertexReport<T>, tol: &Tolerances<T>) -> bool {
    a.local.local_mults.iter().zip(&b.local.local_mults).all(|(&x, &y)| (x - y).abs() <= tol.mult)
}

fn walk_regularity<T: Real>(
    reports: &[PdrVertexReport<T>],
    parts: Option<&[Vec<usize>; 2]>,
    tol: &Tolerances<T>,
) -> WalkRegularity {
    if reports.iter().all(|r| same_local_spectrum(&reports[0], r, tol)) {
        return WalkRegularity::WalkRegular;
    }
    let constant_on = |part: &[usize]| part.iter().all(|&u| same_local_spectrum(&reports[part[0]], &reports[u], tol));
    match parts {
        Some([p1, p2]) if constant_on(p1) && constant_on(p2) => WalkRegularity::WalkBiregular,
        _ => WalkRegularity::Neither,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_named;

    fn tol() -> Tolerances<f64> {
        Tolerances::default()
    }

    #[test]
    fn petersen_is_distance_regular() {
        let g = generate_named("petersen", &[]).unwrap();
        let c = classify(&g, &tol()).unwrap();
        assert_eq!(c.verdict, Verdict::DistanceRegular);
        assert_eq!(c.parts.len(), 1);
        assert_eq!(c.parts[0].array.to_string(), "{3,2;1,1}");
        assert_eq!(c.walk_regularity, WalkRegularity::WalkRegular);
        assert!((c.alpha_levels[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn complete_bipartite_is_distance_biregular() {
        let g = generate_named("complete_bipartite", &[2, 3]).unwrap();
        let c = classify(&g, &tol()).unwrap();
        assert_eq!(c.verdict, Verdict::DistanceBiregular);
        assert_eq!(c.walk_regularity, WalkRegularity::WalkBiregular);
        let arrays: Vec<String> = c.parts.iter().map(|p| p.array.to_string()).collect();
        assert_eq!(arrays, vec!["{3,1;1,3}", "{2,2;1,2}"]);
        // (δ1, δ2) = (3, 2)
        assert!((c.parts[0].alpha - (5f64 / 4.0).sqrt()).abs() < 1e-9);
        assert!((c.parts[1].alpha - (5f64 / 6.0).sqrt()).abs() < 1e-9);
    }

    #[test]
    fn path_is_not_pdr() {
        let g = generate_named("path", &[4]).unwrap();
        let c = classify(&g, &tol()).unwrap();
        assert_eq!(c.verdict, Verdict::NotPdr);
        let w = c.witness.unwrap();
        assert_eq!(w.vertex, 1);
        assert!(w.partition.is_some());
        assert_eq!(c.walk_regularity, WalkRegularity::Neither);
    }

    #[test]
    fn trivial_graphs() {
        let c = classify::<f64>(&Graph::empty(1), &tol()).unwrap();
        assert_eq!(c.verdict, Verdict::DistanceRegular);
        assert_eq!(c.parts[0].array.to_string(), "{;}");
        let k2 = generate_named("complete", &[2]).unwrap();
        assert_eq!(classify::<f64>(&k2, &tol()).unwrap().parts[0].array.to_string(), "{1;1}");
    }

    #[test]
    fn single_precision_classification() {
        let g = generate_named("cycle", &[6]).unwrap();
        let c = classify::<f32>(&g, &Tolerances::default()).unwrap();
        assert_eq!(c.verdict, Verdict::DistanceRegular);
        assert_eq!(c.parts[0].array.to_string(), "{2,1,1;1,1,2}");
    }
}
