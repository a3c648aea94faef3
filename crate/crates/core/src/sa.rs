//! Prefix-doubling sorters used by the transform builders.

/// Suffix array of an integer text by prefix doubling, `O(n log^2 n)`.
///
/// A suffix that runs out of text sorts before any extension of it.
pub(crate) fn suffix_array(text: &[u32]) -> Vec<usize> {
    let n = text.len();
    let mut sa: Vec<usize> = (0..n).collect();
    if n == 0 {
        return sa;
    }
    let mut rank: Vec<u64> = text.iter().map(|&c| c as u64).collect();
    let mut next = vec![0u64; n];
    let mut h = 1;
    loop {
        let key = |i: usize| (rank[i] << 32) | if i + h < n { rank[i + h] + 1 } else { 0 };
        sa.sort_unstable_by_key(|&i| key(i));
        next[sa[0]] = 0;
        for w in 1..n {
            next[sa[w]] = next[sa[w - 1]] + u64::from(key(sa[w - 1]) != key(sa[w]));
        }
        std::mem::swap(&mut rank, &mut next);
        if rank[sa[n - 1]] as usize == n - 1 || h >= n {
            return sa;
        }
        h *= 2;
    }
}

/// Sorts every conjugate of every string by the omega-order of the
/// conjugates, ties broken by `(exponent, string, offset)`.
///
/// Returns `(string, offset)` pairs, both 0-based.
pub(crate) fn sort_conjugates(strings: &[&[u8]], exponents: &[usize]) -> Vec<(usize, usize)> {
    let mut owner = Vec::new();
    let mut start = Vec::with_capacity(strings.len());
    for (s, t) in strings.iter().enumerate() {
        start.push(owner.len());
        owner.extend((0..t.len()).map(|o| (s, o)));
    }
    let n = owner.len();
    let max_len = strings.iter().map(|t| t.len()).max().unwrap_or(0);
    let mut rank: Vec<u64> = owner.iter().map(|&(s, o)| strings[s][o] as u64).collect();
    let mut next = vec![0u64; n];
    let mut order: Vec<usize> = (0..n).collect();
    let shift = |p: usize, h: usize| {
        let (s, o) = owner[p];
        start[s] + (o + h) % strings[s].len()
    };
    // After this loop the ranks compare the first `cover` symbols of the
    // infinite powers; 2 * max_len symbols decide the omega-order.
    let mut cover = 1;
    while cover < 2 * max_len {
        let key = |p: usize| (rank[p] << 32) | rank[shift(p, cover)];
        order.sort_unstable_by_key(|&p| key(p));
        next[order[0]] = 0;
        for w in 1..n {
            next[order[w]] = next[order[w - 1]] + u64::from(key(order[w - 1]) != key(order[w]));
        }
        std::mem::swap(&mut rank, &mut next);
        cover *= 2;
        if rank[order[n - 1]] as usize == n - 1 {
            break;
        }
    }
    order.sort_unstable_by_key(|&p| {
        let (s, o) = owner[p];
        (rank[p], exponents[s], s, o)
    });
    order.into_iter().map(|p| owner[p]).collect()
}
