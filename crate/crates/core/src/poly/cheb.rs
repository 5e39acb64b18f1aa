use super::intpoly::IntPoly;

/// `p_k = x^k U_k((1-x)/(2x))` for `k >= -1`, via `p_{-1} = 0`, `p_0 = 1`,
/// `p_k = (1-x) p_{k-1} - x^2 p_{k-2}`.
///
/// # Panics
/// When `k < -1`; `p_{-2}` is not a polynomial.
pub fn p_cheb(k: i64) -> IntPoly {
    assert!(k >= -1, "p_k is defined for k >= -1, got {k}");
    if k == -1 {
        return IntPoly::zero();
    }
    let one_minus_x = IntPoly::from_i64s(&[1, -1]);
    let x2 = IntPoly::from_i64s(&[0, 0, 1]);
    let mut prev = IntPoly::zero();
    let mut cur = IntPoly::one();
    for _ in 0..k {
        let next = &(&one_minus_x * &cur) - &(&x2 * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `q_k = p_k + x p_{k-1} = x^k (U_k + U_{k-1})` for `k >= 0`.
pub fn q_cheb(k: i64) -> IntPoly {
    assert!(k >= 0, "q_k is defined for k >= 0, got {k}");
    &p_cheb(k) + &p_cheb(k - 1).shift(1)
}

/// Checks `U_{k+w} U_{l+w} - U_k U_l = U_{w-1} U_{k+l+w+1}` in the p-family,
/// where it reads `p_{k+w} p_{l+w} - x^{2w} p_k p_l = p_{w-1} p_{k+l+w+1}`
/// (both sides multiplied by `x^{k+l+2w}`).
pub fn cheby_sum_identity_check(k: i64, l: i64, w: i64) -> bool {
    assert!(k >= -1 && l >= -1 && w >= 0);
    let lhs = &(&p_cheb(k + w) * &p_cheb(l + w)) - &(&p_cheb(k) * &p_cheb(l)).shift(2 * w as usize);
    let rhs = &p_cheb(w - 1) * &p_cheb(k + l + w + 1);
    lhs == rhs
}
