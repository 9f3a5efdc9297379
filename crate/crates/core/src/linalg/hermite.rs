//! Row Hermite normal form over a Euclidean domain.
//!
//! Pivots are canonical associates (positive over `ZZ`, monic over `K[x]`,
//! one over a field) and entries above a pivot are reduced modulo it.

use crate::ring::{Elem, Ring};

pub(crate) type Row = Vec<Elem>;

pub(crate) fn axpy(ring: &Ring, target: &mut Row, c: &Elem, src: &Row) {
    if ring.is_zero(c) {
        return;
    }
    for (t, s) in target.iter_mut().zip(src) {
        if !ring.is_zero(s) {
            *t = ring.add(t, &ring.mul(c, s));
        }
    }
}

fn scale_row(ring: &Ring, row: &mut Row, c: &Elem) {
    for e in row.iter_mut() {
        *e = ring.mul(c, e);
    }
}

/// Reduce `rows` in place to Hermite normal form considering the first
/// `pivot_cols` columns for pivots first and the remaining ones after.
/// Returns the pivot column of each leading row; rows after the last
/// pivot row are zero.
pub(crate) fn hermite_in_place(ring: &Ring, rows: &mut [Row], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        loop {
            let best = (r..rows.len())
                .filter(|&i| !ring.is_zero(&rows[i][c]))
                .min_by_key(|&i| ring.euclid_size(&rows[i][c]));
            let Some(best) = best else { break };
            rows.swap(r, best);
            let mut done = true;
            let (head, tail) = rows.split_at_mut(r + 1);
            let pivot_row = &head[r];
            for row in tail.iter_mut() {
                if ring.is_zero(&row[c]) {
                    continue;
                }
                let (q, rem) = ring.div_rem(&row[c], &pivot_row[c]);
                axpy(ring, row, &ring.neg(&q), pivot_row);
                if !ring.is_zero(&rem) {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if ring.is_zero(&rows[r][c]) {
            continue;
        }
        let u = ring.unit_normal(&rows[r][c]);
        scale_row(ring, &mut rows[r], &u);
        let (head, tail) = rows.split_at_mut(r);
        let pivot_row = &tail[0];
        for row in head.iter_mut() {
            if ring.is_zero(&row[c]) {
                continue;
            }
            let (q, _) = ring.div_rem(&row[c], &pivot_row[c]);
            axpy(ring, row, &ring.neg(&q), pivot_row);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}
