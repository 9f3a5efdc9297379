use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;

fn zz() -> Ring {
    Ring::Integers
}

fn m(ring: &Ring, rows: usize, cols: usize, e: &[i64]) -> Matrix {
    Matrix::from_ints(ring, rows, cols, e)
}

fn parse(ring: &Ring, rows: &[&[&str]], cols: usize) -> Matrix {
    let rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|s| s.to_string()).collect())
        .collect();
    Matrix::parse(ring, &rows, cols).unwrap()
}

#[test]
fn hermite_of_column() {
    let (h, u) = row_reduce(&m(&zz(), 2, 1, &[4, 6]));
    assert_eq!(h, m(&zz(), 2, 1, &[2, 0]));
    assert_eq!(u.mul(&m(&zz(), 2, 1, &[4, 6])), h);
}

#[test]
fn empty_reduces_to_empty() {
    for ring in [zz(), Ring::IntegersMod(6), Ring::parse("QQ[x,y]").unwrap()] {
        let (h, u) = row_reduce(&Matrix::zero(&ring, 0, 3));
        assert_eq!(h.shape(), (0, 3));
        assert_eq!(u.shape(), (0, 0));
    }
}

#[test]
fn field_pivot_is_one() {
    let f = Ring::PrimeField(7);
    let (h, _) = row_reduce(&m(&f, 1, 2, &[3, 1]));
    assert_eq!(h, m(&f, 1, 2, &[1, 5]));
}

#[test]
fn smith_examples() {
    let a = m(&zz(), 2, 2, &[2, 0, 0, 3]);
    let s = smith_form(&a).unwrap();
    assert_eq!(s.s, m(&zz(), 2, 2, &[1, 0, 0, 6]));
    assert_eq!(s.u.mul(&a).mul(&s.v), s.s);
    let i = Matrix::identity(&zz(), 3);
    assert_eq!(smith_form(&i).unwrap().s, i);
    let qx = Ring::parse("QQ[x]").unwrap();
    let x = parse(&qx, &[&["x"]], 1);
    assert_eq!(smith_form(&x).unwrap().s, x);
    assert!(smith_form(&m(&Ring::IntegersMod(4), 1, 1, &[2])).is_err());
}

#[test]
fn solve_examples() {
    let z = zz();
    assert_eq!(solve_left(&m(&z, 1, 1, &[2]), &m(&z, 1, 1, &[6])).unwrap(), Some(m(&z, 1, 1, &[3])));
    assert_eq!(solve_left(&m(&z, 1, 1, &[2]), &m(&z, 1, 1, &[3])).unwrap(), None);
    let z4 = Ring::IntegersMod(4);
    assert_eq!(solve_left(&m(&z4, 1, 1, &[1]), &m(&z4, 1, 1, &[2])).unwrap(), Some(m(&z4, 1, 1, &[2])));
    assert!(solve_left(&m(&z, 1, 1, &[2]), &m(&z, 1, 2, &[2, 2])).is_err());
}

#[test]
fn kernel_examples() {
    let z = zz();
    let k = left_kernel(&m(&z, 2, 1, &[2, 3]));
    assert!(same_row_module(&k, &m(&z, 1, 2, &[3, -2])));
    let f = Ring::Rationals;
    assert_eq!(left_kernel(&m(&f, 2, 2, &[1, 2, 3, 4])).shape(), (0, 2));
    let z4 = Ring::IntegersMod(4);
    let k = left_kernel(&m(&z4, 1, 1, &[2]));
    assert!(same_row_module(&k, &m(&z4, 1, 1, &[2])));
    let r = right_kernel(&m(&z, 1, 2, &[2, 3]));
    assert!(same_row_module(&r.transpose(), &m(&z, 1, 2, &[3, -2])));
}

#[test]
fn constructors_compose() {
    let z = zz();
    let a = Matrix::zero(&z, 2, 0).hstack(&m(&z, 2, 3, &[1, 2, 3, 4, 5, 6]));
    assert_eq!(a.shape(), (2, 3));
    assert_eq!(Matrix::identity(&z, 0).shape(), (0, 0));
}

#[test]
fn koszul_syzygy() {
    let r = Ring::parse("QQ[x,y]").unwrap();
    let a = parse(&r, &[&["x"], &["y"]], 1);
    let k = left_kernel(&a);
    assert!(k.mul(&a).is_zero());
    assert!(same_row_module(&k, &parse(&r, &[&["-y", "x"]], 2)));
}

#[test]
fn multivariate_solve() {
    let r = Ring::parse("QQ[x,y]").unwrap();
    let a = parse(&r, &[&["x", "y"], &["y", "0"]], 2);
    let b = parse(&r, &[&["x^2 + y^2", "x*y"]], 2);
    let x = solve_left(&a, &b).unwrap().unwrap();
    assert_eq!(x.mul(&a), b);
    let c = parse(&r, &[&["1", "0"]], 2);
    assert_eq!(solve_left(&a, &c).unwrap(), None);
}

#[test]
fn univariate_hermite_is_monic() {
    let r = Ring::parse("GF(5)[t]").unwrap();
    let a = parse(&r, &[&["2*t^2 + 2", "t"], &["t + 1", "3"]], 2);
    let (h, u) = row_reduce(&a);
    assert_eq!(u.mul(&a), h);
    assert!(r.is_one(&r.unit_normal(h.get(0, 0))));
}

#[test]
fn invariant_factors_of_torsion() {
    let z = zz();
    let f = invariant_factors(&m(&z, 1, 2, &[0, 2])).unwrap();
    assert_eq!(f, vec![z.from_i64(2), z.from_i64(0)]);
}

// ---------------------------------------------------------------------------
// exhaustive checks over ZZ/n

fn subgroup(n: u64, gens: &[Vec<u64>], len: usize) -> BTreeSet<Vec<u64>> {
    let mut seen = BTreeSet::new();
    let mut frontier = vec![vec![0u64; len]];
    seen.insert(vec![0u64; len]);
    while let Some(v) = frontier.pop() {
        for g in gens {
            let w: Vec<u64> = v.iter().zip(g).map(|(a, b)| (a + b) % n).collect();
            if seen.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    seen
}

fn all_vectors(n: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..n).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn to_u64_rows(a: &Matrix) -> Vec<Vec<u64>> {
    a.row_vectors().iter().map(|r| r.iter().map(to_u64).collect()).collect()
}

fn check_kernel_exact(a: &Matrix, n: u64) {
    let (rows, cols) = a.shape();
    let au = to_u64_rows(a);
    let expected: BTreeSet<Vec<u64>> = all_vectors(n, rows)
        .into_iter()
        .filter(|y| {
            (0..cols).all(|j| (0..rows).map(|i| y[i] * au[i][j]).sum::<u64>() % n == 0)
        })
        .collect();
    let k = left_kernel(a);
    assert!(k.mul(a).is_zero());
    let got = subgroup(n, &to_u64_rows(&k), rows);
    assert_eq!(got, expected, "kernel of {a} over ZZ/{n}");
}

#[test]
fn exhaustive_small_kernels_mod_n() {
    for n in 2..=8u64 {
        let ring = Ring::IntegersMod(n);
        for (r, c) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            for entries in all_vectors(n, r * c) {
                let e: Vec<i64> = entries.iter().map(|&x| x as i64).collect();
                check_kernel_exact(&m(&ring, r, c, &e), n);
            }
        }
    }
}

fn arb_mod_matrix(max_n: u64, max_dim: usize) -> impl Strategy<Value = (u64, Matrix)> {
    (2..=max_n, 1..=max_dim, 1..=max_dim).prop_flat_map(|(n, r, c)| {
        proptest::collection::vec(0..n as i64, r * c)
            .prop_map(move |e| (n, Matrix::from_ints(&Ring::IntegersMod(n), r, c, &e)))
    })
}

fn arb_int_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = Matrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-bound..=bound, r * c)
            .prop_map(move |e| Matrix::from_ints(&Ring::Integers, r, c, &e))
    })
}

proptest! {
    #[test]
    fn kernels_mod_n_up_to_three(( n, a) in arb_mod_matrix(8, 3)) {
        check_kernel_exact(&a, n);
    }

    #[test]
    fn integer_kernel_and_solve(a in arb_int_matrix(4, 9), coeffs in proptest::collection::vec(-5i64..=5, 16)) {
        let k = left_kernel(&a);
        prop_assert!(k.mul(&a).is_zero());
        // scaled combinations of kernel rows are found again
        if k.rows() > 0 {
            let z = Matrix::from_ints(&Ring::Integers, 1, k.rows(), &coeffs[..k.rows()]);
            let y = z.mul(&k);
            prop_assert!(solve_left(&k, &y).unwrap().is_some());
        }
        // rank + nullity
        let (h, u) = row_reduce(&a);
        prop_assert_eq!(u.mul(&a), h.clone());
        let rank = h.nonzero_rows().rows();
        prop_assert_eq!(rank + k.rows(), a.rows());
        // idempotence
        prop_assert_eq!(row_reduce(&h).0, h.clone());
        // rows of A lie in the row module of H and vice versa
        prop_assert!(solve_left(&h, &a).unwrap().is_some());
        prop_assert!(solve_left(&a, &h).unwrap().is_some());
    }

    #[test]
    fn howell_is_canonical((n, a) in arb_mod_matrix(12, 3), mix in proptest::collection::vec(0i64..12, 9)) {
        let ring = Ring::IntegersMod(n);
        let r = a.rows();
        let mixer = Matrix::from_ints(&ring, r, r, &mix[..r * r]);
        let b = a.vstack(&mixer.mul(&a));
        prop_assert_eq!(row_basis(&b), row_basis(&a));
        let (h, u) = row_reduce(&a);
        prop_assert_eq!(u.mul(&a), h.clone());
        prop_assert!(solve_left(&h, &a).unwrap().is_some());
        prop_assert_eq!(row_reduce(&h).0, h);
    }

    #[test]
    fn smith_chain(a in arb_int_matrix(3, 12)) {
        let s = smith_form(&a).unwrap();
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.s.clone());
        let d = s.diagonal();
        let z = Ring::Integers;
        for w in d.windows(2) {
            prop_assert!(z.divide(&w[1], &w[0]).is_some() || (z.is_zero(&w[0]) && z.is_zero(&w[1])));
        }
        for i in 0..s.s.rows() {
            for j in 0..s.s.cols() {
                if i != j {
                    prop_assert!(z.is_zero(s.s.get(i, j)));
                }
            }
        }
        // unimodular transforms
        prop_assert!(z.is_unit(&det(&s.u)));
        prop_assert!(z.is_unit(&det(&s.v)));
        if a.rows() == a.cols() {
            let prod = d.iter().fold(z.one(), |acc, x| z.mul(&acc, x));
            let da = det(&a);
            prop_assert!(z.is_zero(&z.add(&prod, &da)) || z.is_zero(&z.sub(&prod, &da)));
        }
    }

    #[test]
    fn univariate_kernel(e in proptest::collection::vec(-3i64..=3, 6)) {
        let r = Ring::parse("QQ[x]").unwrap();
        let x = r.var(0).unwrap();
        let entries: Vec<Elem> = e.chunks(2).map(|c| r.add(&r.mul(&r.from_i64(c[0]), &x), &r.from_i64(c[1]))).collect();
        let a = Matrix::new(&r, 3, 1, entries).unwrap();
        let k = left_kernel(&a);
        prop_assert!(k.mul(&a).is_zero());
        let (h, _) = row_reduce(&a);
        prop_assert_eq!(h.nonzero_rows().rows() + k.rows(), 3);
    }
}

fn det(a: &Matrix) -> Elem {
    let r = a.ring();
    let n = a.rows();
    if n == 0 {
        return r.one();
    }
    let mut acc = r.zero();
    for j in 0..n {
        let minor_cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let minor_rows: Vec<Vec<Elem>> = (1..n)
            .map(|i| minor_cols.iter().map(|&c| a.get(i, c).clone()).collect())
            .collect();
        let minor = Matrix::from_rows(r, minor_rows, n - 1).unwrap();
        let term = r.mul(a.get(0, j), &det(&minor));
        acc = if j % 2 == 0 { r.add(&acc, &term) } else { r.sub(&acc, &term) };
    }
    acc
}
