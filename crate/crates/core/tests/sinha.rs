use proptest::prelude::*;
use spectral_knots::algebra::{normal_form, AlgebraElement, Monomial, Strand};
use spectral_knots::sinha::{
    degeneracy_pullback, e1_page, e2_entry, e2_page, e2_page_with_limits, face_pullback, Bidegree, ColumnComplex,
    Limits,
};
use spectral_knots::{Error, Field};

fn element(l: Strand, f: &[(Strand, Strand)]) -> AlgebraElement {
    normal_form(&Monomial::new(l, f.iter().copied()).unwrap(), Field::Rationals)
}

fn monomial_on(l: Strand) -> impl Strategy<Value = Vec<(Strand, Strand)>> {
    prop::collection::vec((1..=l, 1..=l), 0..=3)
}

fn strands_and_two_monomials() -> impl Strategy<Value = (Strand, Vec<(Strand, Strand)>, Vec<(Strand, Strand)>)> {
    (2..=5 as Strand).prop_flat_map(|l| (Just(l), monomial_on(l), monomial_on(l)))
}

proptest! {
    #[test]
    fn faces_are_ring_maps((l, a, b) in strands_and_two_monomials(), i_seed in 0u16..16) {
        let i = i_seed % (l + 1);
        let (x, y) = (element(l, &a), element(l, &b));
        let lhs = face_pullback(i, &x.multiply(&y).unwrap()).unwrap();
        let rhs = face_pullback(i, &x).unwrap().multiply(&face_pullback(i, &y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn simplicial_face_identity((l, a, _) in strands_and_two_monomials(), i_seed in 0u16..16, j_seed in 0u16..16) {
        let j = j_seed % (l + 1);
        prop_assume!(j > 0);
        let i = i_seed % j;
        let x = element(l, &a);
        let lhs = face_pullback(i, &face_pullback(j, &x).unwrap()).unwrap();
        let rhs = face_pullback(j - 1, &face_pullback(i, &x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn faces_split_degeneracies((l, a, _) in strands_and_two_monomials(), i_seed in 0u16..16) {
        let x = element(l, &a);
        let i = 1 + i_seed % (l + 1);
        let s = degeneracy_pullback(i, &x).unwrap();
        prop_assert_eq!(&face_pullback(i - 1, &s).unwrap(), &x);
        prop_assert_eq!(&face_pullback(i, &s).unwrap(), &x);
    }
}

#[test]
fn euler_characteristic_of_each_row() {
    for field in [Field::Rationals, Field::prime(2).unwrap()] {
        let n = 6;
        let e1 = e1_page(n, 4, field).unwrap();
        let e2 = e2_page(n, 4, field).unwrap();
        for k in 1..=4 {
            let chi = |p: &spectral_knots::sinha::PageTable| -> i64 {
                (1..=n).map(|l| (if l % 2 == 0 { 1 } else { -1 }) * p.get(Bidegree::sinha(l, k)) as i64).sum()
            };
            assert_eq!(chi(&e1), chi(&e2), "row {} over {field}", 2 * k);
        }
    }
}

#[test]
fn interior_columns_do_not_depend_on_truncation() {
    for field in [Field::Rationals, Field::prime(3).unwrap()] {
        let pages: Vec<_> = (1..=7).map(|n| e2_page(n, 4, field).unwrap()).collect();
        for (a, b) in pages.iter().zip(&pages[1..]) {
            for (&bd, &dim) in &a.entries {
                if (-bd.col as usize) < a.truncation {
                    assert_eq!(b.get(bd), dim, "{bd} changed from n={} to n={}", a.truncation, b.truncation);
                }
            }
        }
    }
}

#[test]
fn page_agrees_with_single_entries() {
    let page = e2_page(6, 4, Field::Rationals).unwrap();
    for (&b, &dim) in &page.entries {
        let l = (-b.col) as usize;
        let k = (b.row / 2) as usize;
        assert_eq!(e2_entry(l, k, 6, Field::Rationals).unwrap(), dim, "{b}");
    }
}

#[test]
fn page_is_deterministic() {
    let a = e2_page(6, 4, Field::Rationals).unwrap();
    for _ in 0..3 {
        assert_eq!(e2_page(6, 4, Field::Rationals).unwrap(), a);
    }
}

#[test]
fn column_complexes_are_complexes() {
    for k in 0..=4 {
        ColumnComplex::build(k, 8, Field::prime(5).unwrap()).check().unwrap();
    }
}

#[test]
fn capacity_guard() {
    let tiny = Limits { max_basis: 10 };
    assert!(matches!(e2_page_with_limits(6, 4, Field::Rationals, tiny), Err(Error::Capacity { .. })));
    assert!(matches!(e2_page(0, 1, Field::Rationals), Err(Error::Argument(_))));
    assert!(matches!(e2_entry(3, 1, 2, Field::Rationals), Err(Error::Argument(_))));
}
