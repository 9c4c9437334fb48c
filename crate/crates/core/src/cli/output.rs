use serde::Serialize;

use crate::exactmath::{Poly, Rat};
use crate::extension::ExtendedPotential;
use crate::families::Family;
use crate::ladder::Check;
use crate::numerics::evaluate_potential;

/// Rational as a pair of integer strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatJson {
    pub num: String,
    pub den: String,
}

impl From<&Rat> for RatJson {
    fn from(r: &Rat) -> Self {
        RatJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

fn coeffs(p: &Poly) -> Vec<RatJson> {
    p.coeffs().iter().map(RatJson::from).collect()
}

#[derive(Debug, Serialize)]
pub struct CorrectionJson {
    pub num: Vec<RatJson>,
    pub den: Vec<RatJson>,
}

#[derive(Debug, Serialize)]
pub struct PotentialJson {
    pub offset: RatJson,
    /// Closed-form Wronskian, in `x` for HO and in `z = x^2/2` for RHO.
    pub wronskian: Vec<RatJson>,
    pub wronskian_variable: String,
    pub correction: CorrectionJson,
}

#[derive(Debug, Serialize)]
pub struct LevelJson {
    pub nu: i64,
    #[serde(rename = "E")]
    pub e: RatJson,
}

#[derive(Debug, Serialize)]
pub struct SampleJson {
    pub x: f64,
    #[serde(rename = "V")]
    pub v: f64,
}

#[derive(Debug, Serialize)]
pub struct ExtensionJson {
    pub family: String,
    pub ell: Option<RatJson>,
    pub m: Vec<u32>,
    pub mode: String,
    pub potential: PotentialJson,
    pub spectrum: Vec<LevelJson>,
    pub samples: Vec<SampleJson>,
    pub checks: Vec<Check>,
}

/// Sample abscissae: 41 points on `[-6, 6]` or `[0.25, 10]`.
pub fn sample_points(family: &Family) -> Vec<f64> {
    let (a, b) = if family.on_half_line() {
        (0.25, 10.0)
    } else {
        (-6.0, 6.0)
    };
    (0..41).map(|i| a + (b - a) * i as f64 / 40.0).collect()
}

pub fn extension_json(
    p: &ExtendedPotential,
    spectrum_count: usize,
    checks: Vec<Check>,
) -> ExtensionJson {
    let samples = sample_points(&p.family)
        .into_iter()
        .filter_map(|x| {
            evaluate_potential(&p.potential, x)
                .ok()
                .map(|v| SampleJson { x, v })
        })
        .collect();
    ExtensionJson {
        family: p.family.name().to_string(),
        ell: p.family.ell().map(RatJson::from),
        m: p.indices.as_slice().to_vec(),
        mode: p.mode.name().to_string(),
        potential: PotentialJson {
            offset: RatJson::from(&p.confining_offset),
            wronskian: coeffs(&p.wronskian),
            wronskian_variable: p.wronskian.var().symbol().to_string(),
            correction: CorrectionJson {
                num: coeffs(p.correction.num()),
                den: coeffs(p.correction.den()),
            },
        },
        spectrum: p
            .spectrum
            .levels(spectrum_count)
            .iter()
            .map(|(nu, e)| LevelJson {
                nu: *nu,
                e: RatJson::from(e),
            })
            .collect(),
        samples,
        checks,
    }
}

/// `x,V` rows at 17 significant digits (lossy).
pub fn extension_csv(p: &ExtendedPotential) -> String {
    let mut out = String::from("x,V\n");
    for x in sample_points(&p.family) {
        if let Ok(v) = evaluate_potential(&p.potential, x) {
            out.push_str(&format!("{x:.16e},{v:.16e}\n"));
        }
    }
    out
}
