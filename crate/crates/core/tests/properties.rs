mod common;

use proptest::prelude::*;

use lcd4::search::{enumerate_rows, partial_min_weight_ok, Checkpoint};
use lcd4::{io, Gf4, Gf4Matrix, Gf4Vector, LinearCode, MonomialTransform, WeightEnumerator};

fn gf4() -> impl Strategy<Value = Gf4> {
    (0u8..4).prop_map(Gf4::from_bits)
}

fn vector_pair(max: usize) -> impl Strategy<Value = (Gf4Vector, Gf4Vector)> {
    (1..=max).prop_flat_map(|n| {
        (
            prop::collection::vec(gf4(), n),
            prop::collection::vec(gf4(), n),
        )
            .prop_map(|(a, b)| (Gf4Vector::new(a), Gf4Vector::new(b)))
    })
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Gf4Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(gf4(), r * c)
            .prop_map(move |data| Gf4Matrix::new(r, c, data).unwrap())
    })
}

/// Full-rank codes with `k ≤ 5`, `n ≤ 10`.
fn code() -> impl Strategy<Value = LinearCode> {
    matrix(5, 10).prop_filter_map("rank deficient", |m| {
        if m.rows() <= m.cols() {
            LinearCode::new(m).ok()
        } else {
            None
        }
    })
}

fn code_and_monomial() -> impl Strategy<Value = (LinearCode, MonomialTransform)> {
    code().prop_flat_map(|c| {
        let n = c.n();
        let perm = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
        let scale = prop::collection::vec((1u8..4).prop_map(Gf4::from_bits), n);
        (Just(c), perm, scale).prop_map(|(c, p, s)| (c, MonomialTransform::new(p, s).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn hermitian_product_is_conjugate_symmetric((x, y) in vector_pair(20)) {
        let xy = x.hermitian_inner_product(&y).unwrap();
        let yx = y.hermitian_inner_product(&x).unwrap();
        prop_assert_eq!(xy, yx.conj());
    }

    #[test]
    fn hermitian_norm_is_weight_parity((x, _) in vector_pair(30)) {
        let norm = x.hermitian_inner_product(&x).unwrap();
        prop_assert_eq!(norm, if x.weight() % 2 == 0 { Gf4::ZERO } else { Gf4::ONE });
    }

    #[test]
    fn rref_is_idempotent(m in matrix(6, 9)) {
        let r = m.rref();
        prop_assert_eq!(&r.matrix.rref().matrix, &r.matrix);
        prop_assert_eq!(r.rank, common::rank(common::to_u8(&m)));
        prop_assert_eq!(r.pivots.len(), r.rank);
    }

    #[test]
    fn null_space_is_orthogonal_complement(m in matrix(5, 9)) {
        let ns = m.null_space();
        prop_assert_eq!(ns.rows(), m.cols() - m.rank());
        if ns.rows() > 0 {
            prop_assert!(m.matmul(&ns.transpose()).unwrap().is_zero());
        }
    }

    #[test]
    fn duals_have_complementary_dimension(c in code()) {
        prop_assume!(c.k() < c.n());
        let dual = c.hermitian_dual().unwrap();
        prop_assert_eq!(dual.k(), c.n() - c.k());
        prop_assert!(dual.hermitian_dual().unwrap().same_code(&c));
        prop_assert_eq!(dual.is_hermitian_lcd(), c.is_hermitian_lcd());
        let g = c.generator();
        prop_assert!(g.matmul(&dual.generator().conj_transpose()).unwrap().is_zero());
    }

    #[test]
    fn lcd_tests_agree(c in code()) {
        let g = common::to_u8(c.generator());
        prop_assert_eq!(c.is_hermitian_lcd(), common::is_hermitian_lcd(&g));
        prop_assert_eq!(c.is_hermitian_lcd_by_intersection(), c.is_hermitian_lcd());
    }

    #[test]
    fn monomial_maps_preserve_weights_and_lcd((c, t) in code_and_monomial()) {
        let image = c.apply_monomial(&t).unwrap();
        prop_assert_eq!(image.weight_enumerator_direct(), c.weight_enumerator_direct());
        prop_assert_eq!(image.is_hermitian_lcd(), c.is_hermitian_lcd());
    }

    #[test]
    fn standard_form_is_equivalent(c in code()) {
        let (std, t) = c.standard_form();
        let image = c.apply_monomial(&t).unwrap();
        prop_assert!(image.same_code(&LinearCode::new(std).unwrap()));
    }

    #[test]
    fn enumerators_match_reference(c in code()) {
        let we = c.weight_enumerator_direct();
        let naive = common::weight_distribution(&common::to_u8(c.generator()));
        prop_assert_eq!(we.counts(), &naive[..]);
        prop_assert_eq!(c.minimum_weight(), common::min_weight(&common::to_u8(c.generator())));
        let parsed = WeightEnumerator::parse_pairs(&we.to_pairs(), c.n()).unwrap();
        prop_assert_eq!(parsed, we);
    }

    #[test]
    fn puncturing_loses_at_most_one(c in code(), i in 1usize..=10) {
        prop_assume!(i <= c.n() && c.n() >= 2);
        let d = c.minimum_weight();
        let p = c.puncture(i).unwrap_or_else(|_| c.clone());
        if d >= 2 {
            let p = c.puncture(i).unwrap();
            prop_assert_eq!(p.n(), c.n() - 1);
            prop_assert_eq!(p.k(), c.k());
            prop_assert!(p.minimum_weight() + 1 >= d);
        } else {
            prop_assert!(p.k() <= c.k());
        }
    }

    #[test]
    fn shortening_keeps_distance(c in code(), i in 1usize..=10) {
        prop_assume!(i <= c.n() && c.k() >= 2);
        let s = c.shorten(i).unwrap();
        let zero_column = c.generator().column(i - 1).iter().all(|x| x.is_zero());
        prop_assert_eq!(s.n(), c.n() - 1);
        prop_assert_eq!(s.k(), if zero_column { c.k() } else { c.k() - 1 });
        prop_assert!(s.minimum_weight() >= c.minimum_weight());
        for row in s.generator().row_iter() {
            let mut x = row.to_vec();
            x.insert(i - 1, Gf4::ZERO);
            prop_assert!(c.contains(&x).unwrap());
        }
    }

    #[test]
    fn code_files_round_trip(c in code()) {
        let text = io::format_code(&c);
        let back = io::parse_code(&text).unwrap();
        prop_assert_eq!(back.generator(), c.generator());
    }

    #[test]
    fn checkpoints_round_trip(
        frontier in prop::collection::vec(0u32..1000, 0..6),
        visited in 0u64..1_000_000,
        found in prop::collection::vec(prop::collection::vec(0u32..1000, 6), 0..4),
    ) {
        let c = Checkpoint { n: 12, k: 6, d: 6, frontier, nodes_visited: visited, found };
        prop_assert_eq!(Checkpoint::parse(&c.to_text()).unwrap(), c);
    }

    #[test]
    fn partial_weight_test_matches_reference(picks in prop::collection::vec(0usize..10_000, 1..4), d in 2usize..5) {
        let rows = enumerate_rows(5, d).unwrap();
        let chosen: Vec<_> = picks.iter().map(|&p| rows[p % rows.len()].clone()).collect();
        let g: Vec<Vec<u8>> = chosen
            .iter()
            .enumerate()
            .map(|(i, r)| {
                (0..chosen.len())
                    .map(|j| u8::from(i == j))
                    .chain(r.vector().iter().map(|x| x.bits()))
                    .collect()
            })
            .collect();
        let rank_ok = common::rank(g.clone()) == g.len();
        prop_assert_eq!(partial_min_weight_ok(&chosen, d), rank_ok && common::min_weight(&g) >= d);
    }
}

#[test]
fn candidate_rows_satisfy_row_conditions() {
    for (len, d) in [(3, 3), (5, 4), (6, 6), (4, 1)] {
        let rows = enumerate_rows(len, d).unwrap();
        let expected = (0..1usize << (2 * len))
            .filter(|&x| {
                let v: Vec<usize> = (0..len).map(|j| (x >> (2 * (len - 1 - j))) & 3).collect();
                v.iter().filter(|&&s| s != 0).count() >= d.saturating_sub(1).max(1)
                    && v.iter().find(|&&s| s != 0) == Some(&1)
            })
            .count();
        assert_eq!(rows.len(), expected, "({len}, {d})");
        assert!(rows
            .windows(2)
            .all(|w| w[0].vector().as_slice() < w[1].vector().as_slice()));
    }
}
