//! Minimum-cost assignment (Hungarian method with potentials).

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum AssignmentError {
    #[error("no finite-cost assignment saturates the smaller side")]
    Infeasible,
    #[error("cost matrix has an empty side")]
    Empty,
}

/// Rectangular matrix of non-negative integer costs; `None` forbids a pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostMatrix {
    rows: usize,
    cols: usize,
    cost: Vec<Option<u64>>,
}

impl CostMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Option<u64>) -> Self {
        let mut cost = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                cost.push(f(r, c));
            }
        }
        CostMatrix { rows, cols, cost }
    }

    /// All-finite matrix from row vectors of equal length.
    pub fn from_rows(rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged cost matrix");
        Self::from_fn(rows.len(), cols, |r, c| Some(rows[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Option<u64> {
        self.cost[r * self.cols + c]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    /// `(row, col)` pairs sorted by row.
    pub pairs: Vec<(usize, usize)>,
    pub total: u64,
}

/// Finds a minimum-cost assignment saturating the smaller side of `c`.
pub fn min_cost_assignment(c: &CostMatrix) -> Result<Assignment, AssignmentError> {
    if c.rows == 0 || c.cols == 0 {
        return Err(AssignmentError::Empty);
    }
    let transposed = c.rows > c.cols;
    let (n, m) = if transposed { (c.cols, c.rows) } else { (c.rows, c.cols) };
    let at = |i: usize, j: usize| if transposed { c.get(j, i) } else { c.get(i, j) };

    // Forbidden pairs cost more than every finite assignment combined.
    let finite_sum: u64 = c.cost.iter().flatten().sum();
    let forbidden = i64::try_from(finite_sum).expect("cost overflow") + 1;
    let weight = |i: usize, j: usize| at(i, j).map_or(forbidden, |x| x as i64);

    // 1-based arrays; column 0 is the virtual start column.
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; m + 1];
    let mut owner = vec![0usize; m + 1];
    let mut way = vec![0usize; m + 1];
    for i in 1..=n {
        owner[0] = i;
        let mut j0 = 0;
        let mut minv = vec![i64::MAX; m + 1];
        let mut used = vec![false; m + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta = i64::MAX;
            let mut j1 = 0;
            for j in 1..=m {
                if used[j] {
                    continue;
                }
                let cur = weight(i0 - 1, j - 1) - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=m {
                if used[j] {
                    u[owner[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut pairs = Vec::with_capacity(n);
    let mut total = 0u64;
    for (j, &row) in owner.iter().enumerate().skip(1) {
        if row == 0 {
            continue;
        }
        let (i, j) = (row - 1, j - 1);
        let cost = at(i, j).ok_or(AssignmentError::Infeasible)?;
        total += cost;
        pairs.push(if transposed { (j, i) } else { (i, j) });
    }
    pairs.sort_unstable();
    Ok(Assignment { pairs, total })
}

/// Like [`min_cost_assignment`], but an empty side yields the empty assignment.
pub(crate) fn assign_or_empty(c: &CostMatrix) -> Result<Assignment, AssignmentError> {
    match min_cost_assignment(c) {
        Err(AssignmentError::Empty) => Ok(Assignment { pairs: Vec::new(), total: 0 }),
        other => other,
    }
}
