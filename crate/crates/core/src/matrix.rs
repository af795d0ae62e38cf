//! Dense row-major linear algebra over a [`Field`].

use crate::gf::{Elem, Field};

pub type Row = Vec<Elem>;

/// Reduced row echelon form; zero rows are dropped. Returns the rows and
/// their pivot columns.
pub fn rref(field: &Field, rows: &[Row], ncols: usize) -> (Vec<Row>, Vec<usize>) {
    let mut m: Vec<Row> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = field.inv(m[rank][col]);
        for x in m[rank].iter_mut() {
            *x = field.mul(inv, *x);
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(factor, y));
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    (m, pivots)
}

pub fn rank(field: &Field, rows: &[Row], ncols: usize) -> usize {
    rref(field, rows, ncols).0.len()
}

/// Basis of `{x : rows . x^T = 0}`.
pub fn nullspace(field: &Field, rows: &[Row], ncols: usize) -> Vec<Row> {
    let (r, pivots) = rref(field, rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Elem::ZERO; ncols];
            v[fc] = field.one();
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = field.neg(row[fc]);
            }
            v
        })
        .collect()
}

pub fn dot(field: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(Elem::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

/// `A B^T`.
pub fn mul_transpose(field: &Field, a: &[Row], b: &[Row]) -> Vec<Row> {
    a.iter()
        .map(|ra| b.iter().map(|rb| dot(field, ra, rb)).collect())
        .collect()
}

pub fn is_nonsingular(field: &Field, square: &[Row]) -> bool {
    rank(field, square, square.len()) == square.len()
}

pub fn map_rows(rows: &[Row], f: impl Fn(Elem) -> Elem) -> Vec<Row> {
    rows.iter()
        .map(|r| r.iter().map(|&x| f(x)).collect())
        .collect()
}

pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_nullspace() {
        let f = Field::prime(3).unwrap();
        let e = |v: &[i64]| v.iter().map(|&c| f.from_int(c)).collect::<Row>();
        let rows = vec![e(&[1, 2, 0, 1]), e(&[2, 1, 0, 2]), e(&[0, 0, 1, 1])];
        let (r, piv) = rref(&f, &rows, 4);
        assert_eq!(r.len(), 2);
        assert_eq!(piv, vec![0, 2]);
        let ns = nullspace(&f, &rows, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &rows {
                assert!(dot(&f, row, v).is_zero());
            }
        }
    }

    #[test]
    fn empty_inputs() {
        let f = Field::gf4();
        assert_eq!(rank(&f, &[], 3), 0);
        assert_eq!(nullspace(&f, &[], 2).len(), 2);
        assert!(is_nonsingular(&f, &[]));
    }
}
