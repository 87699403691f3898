//! Named codes with explicit generator blocks, the codes derived from them by
//! shortening and puncturing, and a verifier for their claimed properties.
//!
//! Explicit codes are `(I_k | M)` with `M` read from the text files under
//! `data/`. `L18` is stored transposed (3 × 15) and transposed on load.

use serde::Serialize;

use crate::code::{CodeParams, LinearCode, WeightEnumerator};
use crate::error::{Error, Result};
use crate::gf4::Gf4Matrix;
use crate::io;

/// Where a named code comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// `(I_k | M)` with `M` given by a data file.
    Explicit {
        data: &'static str,
        transposed: bool,
    },
    /// `S(parent, coordinate)`, 1-based.
    Shorten {
        parent: &'static str,
        coordinate: usize,
    },
    /// `parent` punctured at `coordinate`, 1-based.
    Puncture {
        parent: &'static str,
        coordinate: usize,
    },
}

/// A named code and what is claimed about it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub name: &'static str,
    pub construction: Construction,
    pub expected: CodeParams,
    pub expected_lcd: bool,
    /// Nonzero `(weight, count)` terms of the claimed weight enumerator.
    pub enumerator: Option<&'static [(usize, u128)]>,
}

impl Certificate {
    pub fn expected_enumerator(&self) -> Option<WeightEnumerator> {
        self.enumerator
            .map(|terms| WeightEnumerator::from_terms(self.expected.n, terms))
    }
}

const M15: &str = include_str!("../../data/m15.txt");
const M17_1: &str = include_str!("../../data/m17_1.txt");
const M17_2: &str = include_str!("../../data/m17_2.txt");
const M20: &str = include_str!("../../data/m20.txt");
const N12: &str = include_str!("../../data/n12.txt");
const N20: &str = include_str!("../../data/n20.txt");
const L18_T: &str = include_str!("../../data/l18_transposed.txt");

const fn explicit(data: &'static str) -> Construction {
    Construction::Explicit {
        data,
        transposed: false,
    }
}

const fn shorten(parent: &'static str, coordinate: usize) -> Construction {
    Construction::Shorten { parent, coordinate }
}

const fn cert(
    name: &'static str,
    construction: Construction,
    (n, k, d): (usize, usize, usize),
    enumerator: Option<&'static [(usize, u128)]>,
) -> Certificate {
    Certificate {
        name,
        construction,
        expected: CodeParams::new(n, k, d),
        expected_lcd: true,
        enumerator,
    }
}

#[rustfmt::skip]
const C14_WE: &[(usize, u128)] = &[
    (0, 1), (7, 210), (8, 252), (9, 588), (10, 945), (11, 882), (12, 819), (13, 336), (14, 63),
];
#[rustfmt::skip]
const C15_WE: &[(usize, u128)] = &[
    (0, 1), (7, 336), (8, 756), (9, 1323), (10, 2415), (11, 4095), (12, 3759), (13, 2289),
    (14, 1197), (15, 213),
];
#[rustfmt::skip]
const C17_1_WE: &[(usize, u128)] = &[
    (0, 1), (9, 201), (10, 279), (11, 492), (12, 777), (13, 840), (14, 849), (15, 456),
    (16, 174), (17, 27),
];
#[rustfmt::skip]
const C17_2_WE: &[(usize, u128)] = &[
    (0, 1), (8, 204), (9, 549), (10, 1053), (11, 1977), (12, 3117), (13, 3711), (14, 3111),
    (15, 1875), (16, 642), (17, 144),
];
#[rustfmt::skip]
const C19_WE: &[(usize, u128)] = &[
    (0, 1), (9, 111), (10, 423), (11, 801), (12, 1509), (13, 2595), (14, 3291), (15, 3315),
    (16, 2502), (17, 1362), (18, 402), (19, 72),
];
#[rustfmt::skip]
const C20_WE: &[(usize, u128)] = &[
    (0, 1), (10, 297), (11, 441), (12, 978), (13, 1767), (14, 2685), (15, 3381), (16, 3078),
    (17, 2349), (18, 1038), (19, 318), (20, 51),
];
#[rustfmt::skip]
const D12_WE: &[(usize, u128)] = &[
    (0, 1), (5, 72), (6, 177), (7, 378), (8, 792), (9, 1044), (10, 999), (11, 522), (12, 111),
];
#[rustfmt::skip]
const D20_WE: &[(usize, u128)] = &[
    (0, 1), (9, 288), (10, 714), (11, 1725), (12, 3888), (13, 7272), (14, 11208), (15, 13338),
    (16, 12423), (17, 8640), (18, 4446), (19, 1377), (20, 216),
];

/// Every named code, parents before the codes derived from them.
pub static CERTIFICATES: &[Certificate] = &[
    cert("C15", explicit(M15), (15, 7, 7), Some(C15_WE)),
    cert("C14", shorten("C15", 4), (14, 6, 7), Some(C14_WE)),
    cert("C17_1", explicit(M17_1), (17, 6, 9), Some(C17_1_WE)),
    cert("C17_2", explicit(M17_2), (17, 7, 8), Some(C17_2_WE)),
    cert("C20", explicit(M20), (20, 7, 10), Some(C20_WE)),
    cert(
        "C19",
        Construction::Puncture {
            parent: "C20",
            coordinate: 1,
        },
        (19, 7, 9),
        Some(C19_WE),
    ),
    cert("D12", explicit(N12), (12, 6, 5), Some(D12_WE)),
    cert("D20", explicit(N20), (20, 8, 9), Some(D20_WE)),
    cert(
        "E18",
        Construction::Explicit {
            data: L18_T,
            transposed: true,
        },
        (18, 15, 3),
        None,
    ),
    cert("E17", shorten("E18", 1), (17, 14, 3), None),
    cert("E16", shorten("E17", 2), (16, 13, 3), None),
    cert("E15", shorten("E16", 1), (15, 12, 3), None),
    cert("E14", shorten("E15", 4), (14, 11, 3), None),
    cert("E13", shorten("E14", 1), (13, 10, 3), None),
    cert("E12", shorten("E13", 2), (12, 9, 3), None),
    cert("E11", shorten("E12", 1), (11, 8, 3), None),
    cert("E10", shorten("E11", 2), (10, 7, 3), None),
    cert("E9", shorten("E10", 2), (9, 6, 3), None),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    CERTIFICATES.iter().map(|c| c.name)
}

pub fn certificate(name: &str) -> Result<&'static Certificate> {
    CERTIFICATES
        .iter()
        .find(|c| c.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownCode(name.to_string()))
}

/// The redundancy block `M` of an explicit code, as used in `(I_k | M)`.
pub fn redundancy_block(name: &str) -> Result<Gf4Matrix> {
    match &certificate(name)?.construction {
        Construction::Explicit { data, transposed } => {
            let m = io::parse_matrix(data)?;
            Ok(if *transposed { m.transpose() } else { m })
        }
        _ => Err(Error::InvalidParameters(format!(
            "{name} is not given by an explicit matrix"
        ))),
    }
}

/// Builds a named code, following derivations back to explicit matrices.
pub fn build(name: &str) -> Result<LinearCode> {
    let cert = certificate(name)?;
    match cert.construction {
        Construction::Explicit { .. } => LinearCode::systematic(&redundancy_block(name)?),
        Construction::Shorten { parent, coordinate } => build(parent)?.shorten(coordinate),
        Construction::Puncture { parent, coordinate } => build(parent)?.puncture(coordinate),
    }
}

/// Recomputed properties of a named code against its claims.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub lcd: bool,
    /// `None` when no enumerator is claimed.
    pub enumerator_ok: Option<bool>,
    pub pass: bool,
    #[serde(skip)]
    pub expected: CodeParams,
    /// Whether the claimed enumerator's coefficients sum to `4^k`.
    #[serde(skip)]
    pub claimed_total_ok: Option<bool>,
}

/// Rebuilds a named code and checks `[n, k, d]`, the LCD property, and the
/// weight enumerator where one is claimed.
pub fn verify(name: &str) -> Result<VerificationReport> {
    let cert = certificate(name)?;
    Ok(verify_code(cert, &build(name)?))
}

/// Checks an arbitrary code against a certificate's claims.
pub fn verify_code(cert: &Certificate, code: &LinearCode) -> VerificationReport {
    let params = code.params();
    let lcd = code.is_hermitian_lcd();
    let claimed = cert.expected_enumerator();
    let claimed_total_ok = claimed
        .as_ref()
        .map(|we| we.total() == 4u128.pow(cert.expected.k as u32));
    let enumerator_ok = claimed.map(|we| code.weight_enumerator().ok() == Some(we));
    let pass = params == cert.expected
        && lcd == cert.expected_lcd
        && enumerator_ok != Some(false)
        && claimed_total_ok != Some(false);
    VerificationReport {
        name: cert.name.to_string(),
        n: params.n,
        k: params.k,
        d: params.d,
        lcd,
        enumerator_ok,
        pass,
        expected: cert.expected,
        claimed_total_ok,
    }
}

pub fn verify_all() -> Result<Vec<VerificationReport>> {
    CERTIFICATES.iter().map(|c| verify(c.name)).collect()
}
