//! Codeword enumeration kernels over packed generator rows.

use rayon::prelude::*;

use crate::gf4::{Gf4, Packed};

/// The four multiples `0·g, 1·g, ω·g, ω²·g` of each row.
fn multiples(rows: &[Packed]) -> Vec<[Packed; 4]> {
    rows.iter()
        .map(|g| [Packed::ZERO, *g, g.scale(Gf4::OMEGA), g.scale(Gf4::OMEGA2)])
        .collect()
}

fn accumulate(mults: &[[Packed; 4]], acc: Packed, counts: &mut [u128]) {
    match mults {
        [] => counts[acc.weight() as usize] += 1,
        [last] => {
            for m in last {
                counts[acc.xor(*m).weight() as usize] += 1;
            }
        }
        [first, rest @ ..] => {
            for m in first {
                accumulate(rest, acc.xor(*m), counts);
            }
        }
    }
}

/// Weight distribution of the span of `rows` by visiting all `4^k` codewords.
///
/// The top two rows are split across threads once the span is large enough;
/// per-branch counts are summed, so the result does not depend on scheduling.
pub(crate) fn weight_distribution(rows: &[Packed], n: usize) -> Vec<u128> {
    let mults = multiples(rows);
    if rows.len() < 8 {
        let mut counts = vec![0u128; n + 1];
        accumulate(&mults, Packed::ZERO, &mut counts);
        return counts;
    }
    let (head, tail) = mults.split_at(2);
    (0..16usize)
        .into_par_iter()
        .map(|b| {
            let acc = head[0][b & 3].xor(head[1][b >> 2]);
            let mut counts = vec![0u128; n + 1];
            accumulate(tail, acc, &mut counts);
            counts
        })
        .reduce(
            || vec![0u128; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

/// Minimum nonzero weight of the span of `rows`, where the rows are the
/// systematic rows of a generator whose first `k` coordinates carry an
/// identity block (in any column order).
///
/// A message of weight `w` produces a codeword of weight at least `w`, so
/// messages are visited by increasing weight and the loop stops as soon as
/// `w` reaches the best weight found.
pub(crate) fn minimum_weight_systematic(rows: &[Packed]) -> u32 {
    let k = rows.len();
    let mults = multiples(rows);
    let mut best = u32::MAX;
    let mut support = Vec::with_capacity(k);
    for w in 1..=k {
        if w as u32 >= best {
            break;
        }
        support.clear();
        visit_supports(&mults, 0, w, &mut support, &mut |support| {
            // the first coefficient is fixed to 1: scalar multiples share weights
            let first = mults[support[0]][1];
            best = best.min(min_over_coefficients(&mults, &support[1..], first));
        });
    }
    best
}

fn visit_supports(
    mults: &[[Packed; 4]],
    start: usize,
    remaining: usize,
    support: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        f(support);
        return;
    }
    for i in start..=mults.len() - remaining {
        support.push(i);
        visit_supports(mults, i + 1, remaining - 1, support, f);
        support.pop();
    }
}

fn min_over_coefficients(mults: &[[Packed; 4]], support: &[usize], acc: Packed) -> u32 {
    match support {
        [] => acc.weight(),
        [i, rest @ ..] => mults[*i][1..]
            .iter()
            .map(|m| min_over_coefficients(mults, rest, acc.xor(*m)))
            .min()
            .unwrap_or(u32::MAX),
    }
}

/// All vectors of length `n` and weight `1..=max_weight` whose Hermitian
/// products with every row of `checks` vanish.
pub(crate) fn low_weight_members(checks: &[Packed], n: usize, max_weight: usize) -> Vec<Packed> {
    let mut out = Vec::new();
    let mut support = Vec::new();
    let units: Vec<[Packed; 4]> = (0..n)
        .map(|j| {
            let mut unit = Packed::ZERO;
            unit.set(j, Gf4::ONE);
            [
                Packed::ZERO,
                unit,
                unit.scale(Gf4::OMEGA),
                unit.scale(Gf4::OMEGA2),
            ]
        })
        .collect();
    for w in 1..=max_weight.min(n) {
        visit_supports(&units, 0, w, &mut support, &mut |support| {
            let mut stack = vec![(0usize, Packed::ZERO)];
            while let Some((depth, acc)) = stack.pop() {
                if depth == support.len() {
                    if checks.iter().all(|h| acc.hermitian_dot(*h).is_zero()) {
                        out.push(acc);
                    }
                    continue;
                }
                for m in &units[support[depth]][1..] {
                    stack.push((depth + 1, acc.xor(*m)));
                }
            }
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Packed {
        let v: Vec<Gf4> = s.chars().map(|c| Gf4::from_symbol(c).unwrap()).collect();
        Packed::from_symbols(&v)
    }

    #[test]
    fn repetition_code() {
        let counts = weight_distribution(&[p("11111")], 5);
        assert_eq!(counts, vec![1, 0, 0, 0, 0, 3]);
        assert_eq!(minimum_weight_systematic(&[p("11111")]), 5);
    }

    #[test]
    fn parallel_path_matches_serial_total() {
        let rows: Vec<Packed> = (0..9)
            .map(|i| {
                let mut r = Packed::ZERO;
                r.set(i, Gf4::ONE);
                r.set(9, Gf4::OMEGA);
                r.set(10, Gf4::from_bits(i as u8));
                r
            })
            .collect();
        let counts = weight_distribution(&rows, 11);
        assert_eq!(counts.iter().sum::<u128>(), 4u128.pow(9));
        let min = counts.iter().skip(1).position(|&c| c > 0).unwrap() as u32 + 1;
        assert_eq!(minimum_weight_systematic(&rows), min);
    }

    #[test]
    fn low_weight_search_finds_only_codewords() {
        // code spanned by 110 and 011 has checks (1 1 1) under the Hermitian product
        let found = low_weight_members(&[p("111")], 3, 2);
        assert_eq!(found.len(), 9);
        assert!(found.iter().all(|v| v.weight() == 2));
    }
}
