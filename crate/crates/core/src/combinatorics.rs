//! Subset and composition enumeration.

/// All `k`-subsets of `items`, in lexicographic order of positions.
pub fn k_subsets<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    if k > items.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance to the next combination
        let n = items.len();
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

/// Compositions `(c_1, .., c_len)` of `total` with `mins[j] <= c_j <= maxs[j]`.
pub fn bounded_compositions(total: usize, mins: &[usize], maxs: &[usize]) -> Vec<Vec<usize>> {
    fn rec(
        j: usize,
        left: usize,
        mins: &[usize],
        maxs: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if j == mins.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest_min: usize = mins[j + 1..].iter().sum();
        let rest_max: usize = maxs[j + 1..].iter().sum();
        let lo = mins[j].max(left.saturating_sub(rest_max));
        let hi = maxs[j].min(left.saturating_sub(rest_min));
        if left < rest_min {
            return;
        }
        for c in lo..=hi {
            cur.push(c);
            rec(j + 1, left - c, mins, maxs, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, total, mins, maxs, &mut Vec::new(), &mut out);
    out
}

/// Every `size`-subset of the union of `blocks` that meets each block,
/// returned sorted. Built block-by-block so no rejected subsets are generated.
pub fn crossing_subsets(blocks: &[Vec<usize>], size: usize) -> Vec<Vec<usize>> {
    let mins = vec![1; blocks.len()];
    let maxs: Vec<usize> = blocks.iter().map(Vec::len).collect();
    let mut out = Vec::new();
    for comp in bounded_compositions(size, &mins, &maxs) {
        let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
        for (block, &c) in blocks.iter().zip(&comp) {
            let picks = k_subsets(block, c);
            let mut next = Vec::with_capacity(partial.len() * picks.len());
            for p in &partial {
                for q in &picks {
                    let mut e = p.clone();
                    e.extend_from_slice(q);
                    next.push(e);
                }
            }
            partial = next;
        }
        out.extend(partial);
    }
    for e in &mut out {
        e.sort_unstable();
    }
    out.sort();
    out
}

/// Heap-free next-permutation over a slice; returns false after the last one.
pub fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
