//! Hull membership as a feasibility LP, solved with a small dense phase-1
//! simplex in `f64`.
//!
//! `p` is in the hull of `v1..v8` iff some `w >= 0` satisfies
//! `sum w_k v_k = p` and `sum w_k = 1`.

const EPS: f64 = 1e-9;

/// Whether `p` lies in the convex hull of `vertices`, up to a small
/// feasibility tolerance relative to the coordinate scale.
pub fn lp_membership(p: &[f64; 4], vertices: &[[f64; 4]; 8]) -> bool {
    const M: usize = 5;
    const N: usize = 8;
    // Columns: 8 weights, 5 artificials, rhs.
    const W: usize = N + M + 1;
    let mut t = [[0.0f64; W]; M];
    for (row, tr) in t.iter_mut().enumerate() {
        let scale = if row < 4 {
            vertices
                .iter()
                .map(|v| v[row].abs())
                .fold(p[row].abs(), f64::max)
                .max(1.0)
        } else {
            1.0
        };
        for (k, v) in vertices.iter().enumerate() {
            tr[k] = if row < 4 { v[row] / scale } else { 1.0 };
        }
        let mut rhs = if row < 4 { p[row] / scale } else { 1.0 };
        if rhs < 0.0 {
            for x in tr[..N].iter_mut() {
                *x = -*x;
            }
            rhs = -rhs;
        }
        tr[N + row] = 1.0;
        tr[W - 1] = rhs;
    }
    let mut basis: [usize; M] = std::array::from_fn(|i| N + i);

    // Minimize the sum of artificials; reduced cost of column j is
    // -sum_i t[i][j] for non-artificial columns.
    for _ in 0..200 {
        let mut entering = None;
        for j in 0..N + M {
            if basis.contains(&j) {
                continue;
            }
            let cost = if j >= N { 1.0 } else { 0.0 };
            let reduced = cost
                - (0..M)
                    .filter(|&i| basis[i] >= N)
                    .map(|i| t[i][j])
                    .sum::<f64>();
            if reduced < -EPS {
                entering = Some(j);
                break;
            }
        }
        let Some(j) = entering else { break };
        let mut leave: Option<(usize, f64)> = None;
        for i in 0..M {
            if t[i][j] > EPS {
                let ratio = t[i][W - 1] / t[i][j];
                let better = match leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < lr - EPS || (ratio <= lr + EPS && basis[i] < basis[li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else { break };
        let piv = t[r][j];
        for x in t[r].iter_mut() {
            *x /= piv;
        }
        let pivot_row = t[r];
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && row[j] != 0.0 {
                let factor = row[j];
                for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                    *x -= factor * y;
                }
            }
        }
        basis[r] = j;
    }
    let infeasibility: f64 = (0..M).filter(|&i| basis[i] >= N).map(|i| t[i][W - 1]).sum();
    infeasibility <= 1e-7
}
