//! Bounds on `d₄(n, k)`, the largest minimum weight of a Hermitian LCD
//! `[n, k]₄` code, and on `d_Q(n, k)`, the largest minimum weight of an
//! entanglement-assisted `[[n, k, d; n-k]]₂` code.
//!
//! Every Hermitian LCD `[n, k, d]₄` code yields an `[[n, k, d; n-k]]₂` code,
//! so `d₄(n, k) ≤ d_Q(n, k)`: lower bounds on `d₄` carry over to `d_Q` and
//! upper bounds on `d_Q` carry over to `d₄`.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::catalog;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Matrix};
use crate::search::{self, SearchConfig, SearchMode};

/// Which largest-minimum-weight function a record bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    /// Hermitian LCD `[n, k]₄` codes.
    D4,
    /// Entanglement-assisted `[[n, k; n-k]]₂` codes.
    DQ,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::D4 => "d4",
            Quantity::DQ => "dQ",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    SpherePacking,
    Singleton,
    ClosedForm,
    /// A constant taken from published tables, not recomputed here.
    Recorded,
    /// An exhaustive search that found no code.
    ExhaustiveSearch,
    /// A code built and checked by this crate.
    Witness,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::SpherePacking => "sphere-packing",
            Source::Singleton => "singleton",
            Source::ClosedForm => "closed-form",
            Source::Recorded => "recorded",
            Source::ExhaustiveSearch => "exhaustive-search",
            Source::Witness => "witness",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: usize,
    pub source: Source,
    /// Name of the code attaining a lower bound, or a short justification.
    pub witness: Option<String>,
}

impl Bound {
    fn new(value: usize, source: Source, witness: Option<String>) -> Bound {
        Bound {
            value,
            source,
            witness,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}", self.value, self.source)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub quantity: Quantity,
    pub n: usize,
    pub k: usize,
    pub lower: Option<Bound>,
    pub upper: Option<Bound>,
}

impl BoundRecord {
    fn empty(quantity: Quantity, n: usize, k: usize) -> BoundRecord {
        BoundRecord {
            quantity,
            n,
            k,
            lower: None,
            upper: None,
        }
    }

    /// The determined value, when the bounds meet.
    pub fn exact(&self) -> Option<usize> {
        match (&self.lower, &self.upper) {
            (Some(l), Some(u)) if l.value == u.value => Some(l.value),
            _ => None,
        }
    }

    /// Keeps the larger lower bound; ties keep the existing one.
    fn raise(&mut self, b: Bound) {
        if self.lower.as_ref().is_none_or(|l| b.value > l.value) {
            self.lower = Some(b);
        }
    }

    /// Keeps the smaller upper bound; ties keep the existing one.
    fn cap(&mut self, b: Bound) {
        if self.upper.as_ref().is_none_or(|u| b.value < u.value) {
            self.upper = Some(b);
        }
    }

    fn lower_value(&self) -> Option<usize> {
        self.lower.as_ref().map(|b| b.value)
    }

    fn upper_value(&self) -> Option<usize> {
        self.upper.as_ref().map(|b| b.value)
    }
}

impl fmt::Display for BoundRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |b: &Option<Bound>| b.as_ref().map_or("unknown".to_string(), Bound::to_string);
        write!(f, "{}({},{})", self.quantity, self.n, self.k)?;
        match self.exact() {
            Some(v) => write!(f, " = {v}")?,
            None => write!(
                f,
                " in [{}, {}]",
                self.lower_value().map_or("?".into(), |v| v.to_string()),
                self.upper_value().map_or("?".into(), |v| v.to_string())
            )?,
        }
        write!(
            f,
            "; lower {}; upper {}",
            show(&self.lower),
            show(&self.upper)
        )
    }
}

fn check_dims(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!(
            "need 1 ≤ k ≤ n, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// The Hamming bound for `q = 4`: `Σ_{j ≤ ⌊(d-1)/2⌋} C(n, j)·3^j ≤ 4^(n-k)`.
pub fn sphere_packing_ok(n: usize, k: usize, d: usize) -> bool {
    let t = d.saturating_sub(1) / 2;
    let mut term = BigUint::from(1u32);
    let mut volume = term.clone();
    for j in 1..=t.min(n) {
        term = term * (3 * (n - j + 1)) / j;
        volume += &term;
    }
    volume <= BigUint::from(1u32) << (2 * (n - k))
}

/// The largest `d ≤ n - k + 1` allowed by the sphere-packing bound.
pub fn sphere_packing_max_d(n: usize, k: usize) -> usize {
    (1..=n - k + 1)
        .rev()
        .find(|&d| sphere_packing_ok(n, k, d))
        .unwrap_or(1)
}

/// `d₄(n, n-1)`: 1 for even `n`, 2 for odd `n`.
pub fn d4_dimension_n_minus_1(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("need n ≥ 2, got {n}")));
    }
    Ok(if n.is_multiple_of(2) { 1 } else { 2 })
}

/// `d₄(n, n-2)`: 3 for `n = 3`, 2 for `n ≥ 4`.
pub fn d4_dimension_n_minus_2(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("need n ≥ 3, got {n}")));
    }
    Ok(if n == 3 { 3 } else { 2 })
}

/// `d₄(n, n-3)`: 3 for `4 ≤ n ≤ 18`, 2 for `n ≥ 19`.
pub fn d4_dimension_n_minus_3(n: usize) -> Result<usize> {
    if n < 4 {
        return Err(Error::InvalidParameters(format!("need n ≥ 4, got {n}")));
    }
    Ok(if n <= 18 { 3 } else { 2 })
}

/// The `[n, n-i, 2]₄` code `(I_{n-i} | A)` whose rows of `A` all equal
/// `(1, 1, 0, …, 0)`. Each row has Hermitian norm `1 + 1 + 1 = 1` and
/// distinct rows are orthogonal, so `G Ḡᵀ = I` and the code is LCD. The sum
/// of two rows has weight 2, so at least two rows are needed: with a single
/// row the code is `[i+1, 1, 3]`.
pub fn build_weight2_lcd(n: usize, i: usize) -> Result<LinearCode> {
    if i < 2 || i + 2 > n {
        return Err(Error::InvalidParameters(format!(
            "need 2 ≤ i ≤ n - 2, got n = {n}, i = {i}"
        )));
    }
    let mut a = Gf4Matrix::zeros(n - i, i);
    for r in 0..n - i {
        a.set(r, 0, Gf4::ONE);
        a.set(r, 1, Gf4::ONE);
    }
    LinearCode::systematic(&a)
}

/// A named code attaining a lower bound.
#[derive(Debug, Clone)]
pub struct Witness {
    pub name: String,
    pub code: LinearCode,
}

fn ones_code(n: usize, k: usize, ones: usize) -> Result<LinearCode> {
    let mut a = Gf4Matrix::zeros(k, n - k);
    for r in 0..k {
        for c in 0..ones {
            a.set(r, c, Gf4::ONE);
        }
    }
    LinearCode::systematic(&a)
}

/// A Hermitian LCD code attaining the closed-form value of `d₄(n, k)` for
/// `k ∈ {n-1, n-2, n-3}`, or `None` outside those dimensions.
///
/// Small `[n, n-3, 3]₄` witnesses for `5 ≤ n ≤ 8` come from a first-hit
/// search.
pub fn closed_form_witness(n: usize, k: usize) -> Result<Option<Witness>> {
    check_dims(n, k)?;
    let w = |name: String, code: LinearCode| Ok(Some(Witness { name, code }));
    match n - k {
        1 if n >= 2 => {
            let ones = if n.is_multiple_of(2) { 0 } else { 1 };
            w(
                format!("(I_{k} | {})", if ones == 0 { "0" } else { "1" }),
                ones_code(n, k, ones)?,
            )
        }
        2 if n == 3 => w("repetition [3,1,3]".into(), ones_code(3, 1, 2)?),
        3 if n == 4 => w("repetition [4,1,3] + zero".into(), ones_code(4, 1, 2)?),
        3 if (5..=8).contains(&n) => {
            let cfg = SearchConfig::new(n, k, 3).mode(SearchMode::FirstHit);
            let code = search::run_search(&cfg)?.found.into_iter().next();
            match code {
                Some(code) => w(format!("search [{n},{k},3]"), code),
                None => Ok(None),
            }
        }
        3 if (9..=18).contains(&n) => w(format!("E{n}"), catalog::build(&format!("E{n}"))?),
        i @ (2 | 3) => w(
            format!("weight-2 (n = {n}, i = {i})"),
            build_weight2_lcd(n, i)?,
        ),
        _ => Ok(None),
    }
}

/// Codes shown not to exist by an exhaustive search over systematic
/// generators: no Hermitian LCD `[n, k, d]₄` code for each `(n, k, d)`.
pub const NONEXISTENCE: &[(usize, usize, usize)] =
    &[(12, 6, 6), (19, 16, 3), (20, 17, 3), (21, 18, 3)];

const TABLES: &str = "published tables";

/// Constants quoted from published tables, stored as given.
pub fn recorded_upper_bounds() -> Vec<BoundRecord> {
    let rec = |v: usize| Some(Bound::new(v, Source::Recorded, Some(TABLES.into())));
    let mut out = Vec::new();
    for (n, k, u) in [
        (14, 6, 7),
        (15, 7, 7),
        (17, 6, 9),
        (17, 7, 8),
        (19, 7, 9),
        (20, 7, 10),
    ] {
        out.push(BoundRecord {
            upper: rec(u),
            ..BoundRecord::empty(Quantity::D4, n, k)
        });
    }
    for (n, k, l, u) in [
        (14, 6, 6, 7),
        (15, 7, 6, 7),
        (17, 6, 8, 9),
        (17, 7, 7, 8),
        (19, 7, 8, 9),
        (20, 7, 9, 10),
        (12, 6, 5, 6),
        (20, 8, 8, 10),
    ] {
        out.push(BoundRecord {
            lower: rec(l),
            upper: rec(u),
            ..BoundRecord::empty(Quantity::DQ, n, k)
        });
    }
    let small = [(3, 1, 3), (4, 2, 2), (5, 3, 2)]
        .into_iter()
        .chain((4..=8).map(|n| (n, n - 3, 3)));
    for (n, k, v) in small {
        out.push(BoundRecord {
            lower: rec(v),
            upper: rec(v),
            ..BoundRecord::empty(Quantity::D4, n, k)
        });
    }
    // The best unrestricted [n, n-3]₄ codes have d = 3 for 9 ≤ n ≤ 21.
    for n in 9..=21 {
        let upper = Some(Bound::new(
            3,
            Source::Recorded,
            Some("unrestricted [n,n-3] codes".into()),
        ));
        out.push(BoundRecord {
            upper,
            ..BoundRecord::empty(Quantity::D4, n, n - 3)
        });
    }
    out
}

fn recorded(quantity: Quantity, n: usize, k: usize) -> impl Iterator<Item = BoundRecord> {
    recorded_upper_bounds()
        .into_iter()
        .filter(move |r| r.quantity == quantity && r.n == n && r.k == k)
}

/// Assembles everything known about `d₄(n, k)`: closed forms, catalogue
/// witnesses, recorded constants, the sphere-packing and Singleton bounds,
/// and exhaustive nonexistence results.
pub fn d4_bounds(n: usize, k: usize) -> Result<BoundRecord> {
    check_dims(n, k)?;
    let mut rec = BoundRecord::empty(Quantity::D4, n, k);
    rec.raise(Bound::new(1, Source::Witness, Some(format!("(I_{k} | 0)"))));
    rec.cap(Bound::new(n - k + 1, Source::Singleton, None));
    rec.cap(Bound::new(
        sphere_packing_max_d(n, k),
        Source::SpherePacking,
        None,
    ));

    let closed = match n - k {
        1 => d4_dimension_n_minus_1(n).ok(),
        2 => d4_dimension_n_minus_2(n).ok(),
        3 => d4_dimension_n_minus_3(n).ok(),
        _ => None,
    };
    if let Some(v) = closed {
        let name = closed_form_witness(n, k)?.map(|w| w.name);
        rec.raise(Bound::new(v, Source::ClosedForm, name));
        rec.cap(Bound::new(v, Source::ClosedForm, None));
    }

    for cert in catalog::CERTIFICATES {
        let p = cert.expected;
        if (p.n, p.k) == (n, k) && cert.expected_lcd {
            rec.raise(Bound::new(p.d, Source::Witness, Some(cert.name.into())));
        }
    }
    for r in recorded(Quantity::D4, n, k).chain(recorded(Quantity::DQ, n, k)) {
        if let Some(u) = r.upper {
            rec.cap(u);
        }
        if r.quantity == Quantity::D4 {
            if let Some(l) = r.lower {
                rec.raise(l);
            }
        }
    }
    // With d₄ ≤ d already known, the absence of an LCD code of weight d
    // leaves d - 1.
    for &(sn, sk, sd) in NONEXISTENCE {
        if (sn, sk) == (n, k) && rec.upper_value() == Some(sd) {
            let why = format!("no Hermitian LCD [{n},{k},{sd}] code");
            rec.cap(Bound::new(sd - 1, Source::ExhaustiveSearch, Some(why)));
        }
    }
    Ok(rec)
}

/// Assembles what is known about `d_Q(n, k)`. Only recorded constants give
/// upper bounds; lower bounds also come from Hermitian LCD codes.
pub fn dq_bounds(n: usize, k: usize) -> Result<BoundRecord> {
    let d4 = d4_bounds(n, k)?;
    let mut rec = BoundRecord::empty(Quantity::DQ, n, k);
    if let Some(l) = d4.lower {
        rec.raise(l);
    }
    for r in recorded(Quantity::DQ, n, k) {
        if let Some(l) = r.lower {
            rec.raise(l);
        }
        if let Some(u) = r.upper {
            rec.cap(u);
        }
    }
    Ok(rec)
}

/// Both records for `(n, k)`.
pub fn bounds(n: usize, k: usize) -> Result<[BoundRecord; 2]> {
    Ok([d4_bounds(n, k)?, dq_bounds(n, k)?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_packing_examples() {
        assert!(sphere_packing_ok(21, 18, 3));
        assert!(!sphere_packing_ok(22, 19, 3));
        assert!(sphere_packing_ok(5, 3, 3));
        assert!(sphere_packing_ok(40, 40, 1));
        assert!(!sphere_packing_ok(6, 3, 5));
    }

    #[test]
    fn closed_form_edges() {
        assert_eq!(d4_dimension_n_minus_1(5).unwrap(), 2);
        assert_eq!(d4_dimension_n_minus_1(6).unwrap(), 1);
        assert_eq!(d4_dimension_n_minus_1(2).unwrap(), 1);
        assert!(d4_dimension_n_minus_1(1).is_err());
        assert_eq!(d4_dimension_n_minus_2(3).unwrap(), 3);
        assert_eq!(d4_dimension_n_minus_2(100).unwrap(), 2);
        assert!(d4_dimension_n_minus_2(2).is_err());
        assert_eq!(d4_dimension_n_minus_3(18).unwrap(), 3);
        assert_eq!(d4_dimension_n_minus_3(19).unwrap(), 2);
        assert!(d4_dimension_n_minus_3(3).is_err());
    }

    #[test]
    fn weight2_code_has_identity_gram() {
        let c = build_weight2_lcd(19, 3).unwrap();
        assert_eq!(c.hermitian_gram(), Gf4Matrix::identity(16));
        assert_eq!(c.params().to_string(), "[19,16,2]_4");
        assert!(build_weight2_lcd(3, 3).is_err());
        assert!(build_weight2_lcd(3, 2).is_err());
        assert!(build_weight2_lcd(5, 1).is_err());
    }

    #[test]
    fn exhaustive_search_tightens_recorded_bound() {
        let r = d4_bounds(12, 6).unwrap();
        assert_eq!(r.exact(), Some(5));
        assert_eq!(r.upper.unwrap().source, Source::ExhaustiveSearch);
        let q = dq_bounds(12, 6).unwrap();
        assert_eq!((q.lower_value(), q.upper_value()), (Some(5), Some(6)));
    }

    #[test]
    fn d20_raises_recorded_lower_bound() {
        let q = dq_bounds(20, 8).unwrap();
        assert_eq!((q.lower_value(), q.upper_value()), (Some(9), Some(10)));
        assert_eq!(q.lower.unwrap().witness.as_deref(), Some("D20"));
    }
}
