//! Dense exact linear algebra over the prime field F_p.
//!
//! Everything here works on coefficient vectors `Vec<u64>` with entries
//! reduced mod p. Dimensions at play are tiny (≤ 64 ring atoms, skew
//! algebras of dimension ≤ a few hundred), so plain Gaussian elimination
//! with full reduction is both exact and fast.

/// Multiplicative inverse mod a prime, via Fermat.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a % p, p - 2, p)
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// A growing row space kept in reduced row echelon form.
///
/// `insert` returns whether the vector enlarged the span; `contains` tests
/// membership without mutating. The retained `basis` rows are the RREF of
/// everything inserted, ordered by pivot column.
#[derive(Debug, Clone)]
pub struct SpanBuilder {
    p: u64,
    width: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(p: u64, width: usize) -> Self {
        SpanBuilder { p, width, rows: Vec::new(), pivots: Vec::new() }
    }

    fn reduce(&self, v: &mut [u64]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc] % self.p;
            if c != 0 {
                for j in pc..self.width {
                    v[j] = (v[j] + (self.p - c) * row[j]) % self.p;
                }
            }
        }
    }

    pub fn insert(&mut self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.width);
        let mut v: Vec<u64> = v.iter().map(|&c| c % self.p).collect();
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&c| c != 0) else {
            return false;
        };
        let s = inv_mod(v[pc], self.p);
        for c in v.iter_mut() {
            *c = *c * s % self.p;
        }
        // back-substitute into the existing rows to stay in RREF
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                for j in 0..self.width {
                    row[j] = (row[j] + (self.p - c) * v[j]) % self.p;
                }
            }
        }
        let at = self.pivots.iter().position(|&q| q > pc).unwrap_or(self.rows.len());
        self.rows.insert(at, v);
        self.pivots.insert(at, pc);
        true
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut v: Vec<u64> = v.iter().map(|&c| c % self.p).collect();
        self.reduce(&mut v);
        v.iter().all(|&c| c == 0)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }
}

/// Basis of the null space { v : A·v = 0 } of a rows×cols matrix, one vector
/// per free column, in ascending free-column order.
pub fn kernel_basis(matrix: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut span = SpanBuilder::new(p, cols);
    for row in matrix {
        span.insert(row);
    }
    let rref = span.basis();
    let pivots = &span.pivots;
    let is_pivot = |j: usize| pivots.contains(&j);
    let mut out = Vec::new();
    for free in 0..cols {
        if is_pivot(free) {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (row, &pc) in rref.iter().zip(pivots) {
            if row[free] != 0 {
                v[pc] = (p - row[free]) % p;
            }
        }
        out.push(v);
    }
    out
}

/// One solution `c` of `Σ_j c_j · columns[j] = target`, if any.
pub fn solve_combination(columns: &[Vec<u64>], target: &[u64], p: u64) -> Option<Vec<u64>> {
    let m = target.len();
    let k = columns.len();
    // augmented [A | target] in row-major form
    let mut a: Vec<Vec<u64>> = (0..m)
        .map(|i| {
            let mut row: Vec<u64> = columns.iter().map(|c| c[i] % p).collect();
            row.push(target[i] % p);
            row
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; k];
    let mut r = 0;
    for j in 0..k {
        let Some(i) = (r..m).find(|&i| a[i][j] != 0) else {
            continue;
        };
        a.swap(r, i);
        let s = inv_mod(a[r][j], p);
        for x in a[r].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..m {
            if i != r && a[i][j] != 0 {
                let c = a[i][j];
                for jj in 0..=k {
                    a[i][jj] = (a[i][jj] + (p - c) * a[r][jj]) % p;
                }
            }
        }
        pivot_of_col[j] = Some(r);
        r += 1;
        if r == m {
            break;
        }
    }
    // inconsistent iff some zero row has nonzero augment
    for row in &a {
        if row[..k].iter().all(|&c| c == 0) && row[k] != 0 {
            return None;
        }
    }
    let mut c = vec![0u64; k];
    for (j, piv) in pivot_of_col.iter().enumerate() {
        if let Some(i) = piv {
            c[j] = a[*i][k];
        }
    }
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_rank_and_membership() {
        let mut s = SpanBuilder::new(3, 4);
        assert!(s.insert(&[1, 2, 0, 0]));
        assert!(s.insert(&[0, 1, 1, 0]));
        assert!(!s.insert(&[1, 0, 1, 0])); // = row1 - 2·row2 over F₃
        assert_eq!(s.rank(), 2);
        assert!(s.contains(&[2, 1, 2, 0]));
        assert!(!s.contains(&[0, 0, 0, 1]));
    }

    #[test]
    fn kernel_of_constraints() {
        // x2 = x4, x3 = x5 over F₃, six variables
        let rows = vec![
            vec![0, 1, 0, 2, 0, 0],
            vec![0, 0, 1, 0, 2, 0],
        ];
        let ker = kernel_basis(&rows, 6, 3);
        assert_eq!(ker.len(), 4);
        for v in &ker {
            assert_eq!(v[1], v[3]);
            assert_eq!(v[2], v[4]);
        }
    }

    #[test]
    fn solve_small_system() {
        let cols = vec![vec![1, 0, 1], vec![0, 1, 1]];
        let c = solve_combination(&cols, &[2, 1, 0], 3).unwrap();
        assert_eq!(c, vec![2, 1]);
        assert!(solve_combination(&cols, &[1, 0, 0], 3).is_none());
    }
}
