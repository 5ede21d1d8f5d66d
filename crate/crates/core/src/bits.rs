//! Subsets of a ground set of at most 64 elements, encoded as `u64` masks.

/// Mask with the low `n` bits set.
#[inline]
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn bit(e: usize) -> u64 {
    1u64 << e
}

#[inline]
pub fn contains(mask: u64, e: usize) -> bool {
    mask >> e & 1 == 1
}

#[inline]
pub fn count(mask: u64) -> usize {
    mask.count_ones() as usize
}

/// Iterates the elements of `mask` in ascending order.
#[inline]
pub fn elements(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let e = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(e)
        }
    })
}

pub fn from_elements<I: IntoIterator<Item = usize>>(items: I) -> u64 {
    items.into_iter().fold(0, |m, e| m | bit(e))
}

/// Spreads the low bits of `compact` onto the positions listed in `positions`.
#[inline]
pub fn expand(compact: u64, positions: &[usize]) -> u64 {
    let mut out = 0;
    for (i, &p) in positions.iter().enumerate() {
        if contains(compact, i) {
            out |= bit(p);
        }
    }
    out
}

/// Inverse of [`expand`]: gathers the bits at `positions` into a compact mask.
#[inline]
pub fn compress(mask: u64, positions: &[usize]) -> u64 {
    let mut out = 0;
    for (i, &p) in positions.iter().enumerate() {
        if contains(mask, p) {
            out |= bit(i);
        }
    }
    out
}

/// All `k`-subsets of `{0..n}` in increasing mask order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { None } else { Some(1u64 << n) };
    let mut next = if k == 0 {
        Some(0u64)
    } else if k > n {
        None
    } else {
        Some(full(k))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                match limit {
                    Some(l) if nxt >= l => None,
                    _ => Some(nxt),
                }
            }
        };
        Some(cur)
    })
}

/// All submasks of `mask`, including `0` and `mask` itself.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut cur = Some(mask);
    std::iter::from_fn(move || {
        let s = cur?;
        cur = if s == 0 { None } else { Some((s - 1) & mask) };
        Some(s)
    })
}

/// Canonical ordering of subsets: by size, then by mask value.
pub fn canonical_key(mask: u64) -> (u32, u64) {
    (mask.count_ones(), mask)
}

/// Formats a mask as `{a,b,c}` with 1-based element labels.
pub fn display(mask: u64) -> String {
    let items: Vec<String> = elements(mask).map(|e| (e + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}
