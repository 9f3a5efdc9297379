//! Smith normal form over Euclidean domains.

use crate::matrix::Matrix;
use crate::ring::Ring;

/// `s = u * a * v` with `s` diagonal, `d_1 | d_2 | ...`, `u` and `v`
/// invertible.
#[derive(Clone, Debug)]
pub struct Smith {
    pub s: Matrix,
    pub u: Matrix,
    pub v: Matrix,
}

impl Smith {
    /// Diagonal entries `d_1, ..., d_min(m, n)`.
    pub fn diagonal(&self) -> Vec<crate::ring::Elem> {
        let k = self.s.rows().min(self.s.cols());
        (0..k).map(|i| self.s.get(i, i).clone()).collect()
    }
}

fn swap_rows(m: &mut Matrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let x = m.get(a, j).clone();
        let y = m.get(b, j).clone();
        m.set(a, j, y);
        m.set(b, j, x);
    }
}

fn swap_cols(m: &mut Matrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let x = m.get(i, a).clone();
        let y = m.get(i, b).clone();
        m.set(i, a, y);
        m.set(i, b, x);
    }
}

/// row_dst += c * row_src
fn add_row(ring: &Ring, m: &mut Matrix, dst: usize, src: usize, c: &crate::ring::Elem) {
    for j in 0..m.cols() {
        let v = ring.add(m.get(dst, j), &ring.mul(c, m.get(src, j)));
        m.set(dst, j, v);
    }
}

fn add_col(ring: &Ring, m: &mut Matrix, dst: usize, src: usize, c: &crate::ring::Elem) {
    for i in 0..m.rows() {
        let v = ring.add(m.get(i, dst), &ring.mul(c, m.get(i, src)));
        m.set(i, dst, v);
    }
}

pub(crate) fn smith(a: &Matrix) -> Smith {
    let ring = a.ring().clone();
    let (m, n) = a.shape();
    let mut s = a.clone();
    let mut u = Matrix::identity(&ring, m);
    let mut v = Matrix::identity(&ring, n);
    let k = m.min(n);
    for t in 0..k {
        // smallest nonzero entry of the trailing block to (t, t)
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if ring.is_zero(s.get(i, j)) {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => ring.euclid_size(s.get(i, j)) < ring.euclid_size(s.get(bi, bj)),
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        swap_rows(&mut s, t, bi);
        swap_rows(&mut u, t, bi);
        swap_cols(&mut s, t, bj);
        swap_cols(&mut v, t, bj);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if ring.is_zero(s.get(i, t)) {
                    continue;
                }
                let (q, r) = ring.div_rem(s.get(i, t), s.get(t, t));
                let nq = ring.neg(&q);
                add_row(&ring, &mut s, i, t, &nq);
                add_row(&ring, &mut u, i, t, &nq);
                if !ring.is_zero(&r) {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if ring.is_zero(s.get(t, j)) {
                    continue;
                }
                let (q, r) = ring.div_rem(s.get(t, j), s.get(t, t));
                let nq = ring.neg(&q);
                add_col(&ring, &mut s, j, t, &nq);
                add_col(&ring, &mut v, j, t, &nq);
                if !ring.is_zero(&r) {
                    clean = false;
                }
            }
            if !clean {
                // move the smallest remainder in row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..m {
                    if !ring.is_zero(s.get(i, t))
                        && ring.euclid_size(s.get(i, t)) < ring.euclid_size(s.get(best.0, best.1))
                    {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    if !ring.is_zero(s.get(t, j))
                        && ring.euclid_size(s.get(t, j)) < ring.euclid_size(s.get(best.0, best.1))
                    {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    swap_rows(&mut s, t, best.0);
                    swap_rows(&mut u, t, best.0);
                } else if best.1 != t {
                    swap_cols(&mut s, t, best.1);
                    swap_cols(&mut v, t, best.1);
                }
                continue;
            }
            // the pivot must divide the whole trailing block
            let offender = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| {
                    let e = s.get(i, j);
                    !ring.is_zero(e) && !ring.is_zero(&ring.div_rem(e, s.get(t, t)).1)
                });
            match offender {
                Some((i, _)) => {
                    let one = ring.one();
                    add_row(&ring, &mut s, t, i, &one);
                    add_row(&ring, &mut u, t, i, &one);
                }
                None => break,
            }
        }
        let unit = ring.unit_normal(s.get(t, t));
        for j in 0..n {
            let x = ring.mul(&unit, s.get(t, j));
            s.set(t, j, x);
        }
        for j in 0..m {
            let x = ring.mul(&unit, u.get(t, j));
            u.set(t, j, x);
        }
    }
    Smith { s, u, v }
}
