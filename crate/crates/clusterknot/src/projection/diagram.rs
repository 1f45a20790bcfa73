//! Planar matchings: the diagrammatic model behind the Markov trace.
//!
//! A matching pairs up `n` top points and `n` bottom points without
//! crossings. Stacking two matchings glues the middle row; every circle
//! sealed inside the middle contributes one loop. Closing a matching joins
//! each top point to the bottom point in the same column.

/// A perfect matching on `n` top points (indices `0..n`) and `n` bottom
/// points (indices `n..2n`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Matching {
    n: usize,
    partner: Vec<usize>,
}

impl Matching {
    /// Straight vertical strands.
    pub(crate) fn identity(n: usize) -> Self {
        let partner = (0..2 * n)
            .map(|p| if p < n { p + n } else { p - n })
            .collect();
        Matching { n, partner }
    }

    /// The generator `e_i`: a cup joining top `i-1`, `i` and a cap joining
    /// bottom `i-1`, `i`, all other strands straight.
    pub(crate) fn generator(n: usize, i: usize) -> Self {
        assert!((1..n).contains(&i), "generator index out of range");
        let mut m = Matching::identity(n);
        let (a, b) = (i - 1, i);
        m.partner[a] = b;
        m.partner[b] = a;
        m.partner[n + a] = n + b;
        m.partner[n + b] = n + a;
        m
    }

    /// Number of loops after joining top `k` to bottom `k` for every column.
    pub(crate) fn closure_loops(&self) -> usize {
        let n = self.n;
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut cur = start;
            loop {
                seen[cur] = true;
                let m = self.partner[cur];
                seen[m] = true;
                cur = if m < n { m + n } else { m - n };
                if cur == start {
                    break;
                }
            }
        }
        loops
    }
}

/// Stacks `upper` on `lower`, returning the sealed loop count and the
/// composite matching.
pub(crate) fn compose(upper: &Matching, lower: &Matching) -> (u64, Matching) {
    let n = upper.n;
    assert_eq!(n, lower.n, "matchings must have the same width");
    let mut partner = vec![usize::MAX; 2 * n];
    let mut mid_used = vec![false; n];
    for start in 0..2 * n {
        if partner[start] != usize::MAX {
            continue;
        }
        let (mut in_upper, mut cur) = (start < n, start);
        let end = loop {
            let p = if in_upper {
                upper.partner[cur]
            } else {
                lower.partner[cur]
            };
            if in_upper {
                if p < n {
                    break p;
                }
                mid_used[p - n] = true;
                cur = p - n;
            } else {
                if p >= n {
                    break p;
                }
                mid_used[p] = true;
                cur = n + p;
            }
            in_upper = !in_upper;
        };
        partner[start] = end;
        partner[end] = start;
    }
    let mut loops = 0;
    for j0 in 0..n {
        if mid_used[j0] {
            continue;
        }
        loops += 1;
        let (mut j, mut via_upper) = (j0, true);
        loop {
            mid_used[j] = true;
            let p = if via_upper {
                upper.partner[n + j]
            } else {
                lower.partner[j]
            };
            j = if via_upper { p - n } else { p };
            via_upper = !via_upper;
            if j == j0 && via_upper {
                break;
            }
        }
    }
    (loops, Matching { n, partner })
}

/// The diagram of a generator word, with the loop factor it peeled off.
pub(crate) fn diagram_of(n: usize, letters: &[u8]) -> (u64, Matching) {
    let mut loops = 0;
    let mut acc = Matching::identity(n);
    for &l in letters {
        let (sealed, next) = compose(&acc, &Matching::generator(n, l as usize));
        loops += sealed;
        acc = next;
    }
    (loops, acc)
}
