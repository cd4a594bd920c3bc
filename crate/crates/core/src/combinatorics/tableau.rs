use super::partition::{r_minus_c_unchecked, Cell, Partition};

/// Filling of a diagram by `1..=n`, weakly decreasing along rows and strictly
/// decreasing down columns.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ReverseTableau {
    shape: Partition,
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl ReverseTableau {
    /// Validate a filling given row by row.
    pub fn from_rows(rows: Vec<Vec<usize>>, n: usize) -> Option<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect::<Vec<_>>()).ok()?;
        if shape.length() != rows.len() {
            return None;
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v < 1 || v > n {
                    return None;
                }
                if j > 0 && row[j - 1] < v {
                    return None;
                }
                if i > 0 && rows[i - 1][j] <= v {
                    return None;
                }
            }
        }
        Some(ReverseTableau { shape, n, rows })
    }

    /// The tableau with constant entry `n+1-i` in row `i`.
    pub fn canonical(shape: &Partition, n: usize) -> Option<Self> {
        if shape.length() > n {
            return None;
        }
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| vec![n - i; p])
            .collect();
        Some(ReverseTableau {
            shape: shape.clone(),
            n,
            rows,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn alphabet(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, s: Cell) -> usize {
        self.rows[s.row - 1][s.col - 1]
    }

    /// Entries in row-reading order.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `λ^(k)` = cells with entry `> k`, for `k = 0..=n`.
    pub fn chain(&self) -> Vec<Partition> {
        (0..=self.n)
            .map(|k| {
                Partition::new(
                    self.rows
                        .iter()
                        .map(|r| r.iter().filter(|&&v| v > k).count())
                        .collect::<Vec<_>>(),
                )
                .expect("level sets of a reverse tableau are partitions")
            })
            .collect()
    }

    /// Number of entries equal to `k`, for `k = 1..=n`.
    pub fn weight(&self) -> Vec<usize> {
        let mut w = vec![0; self.n];
        for &v in self.rows.iter().flatten() {
            w[v - 1] += 1;
        }
        w
    }

    /// `(R\C)` of each step `λ^(k-1) / λ^(k)`, for `k = 1..=n`.
    pub fn strips(&self) -> Vec<Vec<Cell>> {
        let chain = self.chain();
        chain
            .windows(2)
            .map(|w| r_minus_c_unchecked(&w[0], &w[1]))
            .collect()
    }
}

/// All reverse tableaux of shape `λ` with entries in `1..=n`, in lexicographic
/// order of reading words. Empty when `ℓ(λ) > n`.
pub fn enumerate_reverse_tableaux(lambda: &Partition, n: usize) -> Vec<ReverseTableau> {
    let mut out = Vec::new();
    if lambda.length() > n {
        return out;
    }
    let conj = lambda.conjugate();
    let cells: Vec<Cell> = lambda.cells().collect();
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    fill(0, &cells, &conj, n, &mut rows, lambda, &mut out);
    out
}

fn fill(
    idx: usize,
    cells: &[Cell],
    conj: &Partition,
    n: usize,
    rows: &mut Vec<Vec<usize>>,
    shape: &Partition,
    out: &mut Vec<ReverseTableau>,
) {
    let Some(&s) = cells.get(idx) else {
        out.push(ReverseTableau {
            shape: shape.clone(),
            n,
            rows: rows.clone(),
        });
        return;
    };
    let (i, j) = (s.row - 1, s.col - 1);
    let mut hi = n;
    if j > 0 {
        hi = hi.min(rows[i][j - 1]);
    }
    if i > 0 {
        hi = hi.min(rows[i - 1][j] - 1);
    }
    // room for the strictly smaller entries below in this column
    let lo = conj.part(s.col) - i;
    for v in lo..=hi {
        rows[i][j] = v;
        fill(idx + 1, cells, conj, n, rows, shape, out);
    }
    rows[i][j] = 0;
}

/// Partitions `ν ⊆ μ` such that `μ - ν` is a horizontal strip, and `ℓ(ν) ≤ max_len`.
pub fn horizontal_strip_inners(mu: &Partition, max_len: usize) -> Vec<Partition> {
    let l = mu.length();
    let mut out = Vec::new();
    let mut cur = vec![0usize; l];
    fn go(i: usize, mu: &Partition, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == cur.len() {
            let p = Partition::new(cur.clone()).expect("interlacing gives a partition");
            if p.length() <= max_len {
                out.push(p);
            }
            return;
        }
        for v in mu.part(i + 2)..=mu.part(i + 1) {
            cur[i] = v;
            go(i + 1, mu, max_len, cur, out);
        }
    }
    go(0, mu, max_len, &mut cur, &mut out);
    out
}
