use crate::lattice::MAX_DIM;

/// Exact determinant of the leading `n x n` block (fraction-free Bareiss).
pub fn determinant(rows: &[[i128; MAX_DIM]], n: usize) -> i128 {
    let mut m = [[0i128; MAX_DIM]; MAX_DIM];
    for (i, r) in rows.iter().enumerate().take(n) {
        m[i] = *r;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * m[n - 1][n - 1]
    }
}

/// Rank of the leading `cols` columns of `rows`.
pub(crate) fn rank(rows: &[[i128; MAX_DIM]], cols: usize) -> usize {
    let mut m: Vec<[i128; MAX_DIM]> = rows.to_vec();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            let (a, b) = (m[r][c], m[i][c]);
            for j in 0..cols {
                m[i][j] = m[i][j] * a - m[r][j] * b;
            }
        }
        r += 1;
    }
    r
}
