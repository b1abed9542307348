/// Plurigenus `P_m`: 1, 0 and `1 + m(m−1)/2` for m = 0, 1 and m ≥ 2.
pub fn oracle_plurigenus(m: u32) -> u64 {
    match m {
        0 => 1,
        1 => 0,
        _ => 1 + (m as u64) * (m as u64 - 1) / 2,
    }
}

/// Dimension of `H⁰(C, mM + iL)` on a paracanonical curve of the ℤ/3 cover:
/// (1,0,0), (0,0,1), (1,2,1) for m = 0, 1, 2 and `m − 1` in every weight
/// from m = 3 on.
pub fn oracle_curve_dim(m: u32, i: u32) -> u64 {
    match (m, i % 3) {
        (0, 0) => 1,
        (0, _) => 0,
        (1, 2) => 1,
        (1, _) => 0,
        (2, 1) => 2,
        (2, _) => 1,
        _ => m as u64 - 1,
    }
}
