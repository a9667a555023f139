//! Cayley tables of standard small groups, used as fixtures and
//! reference inputs.

use alloc::vec;
use alloc::vec::Vec;

use crate::loops::CayleyTable;

/// The cyclic group `Z_n` under addition.
pub fn cyclic(n: usize) -> CayleyTable {
    let mut table = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            table[x * n + y] = ((x + y) % n) as u16;
        }
    }
    CayleyTable::from_flat(n, table).expect("cyclic table is a group")
}

/// The dihedral group of order `2n` (symmetries of the regular n-gon).
///
/// Elements `0..n` are rotations `r^k`, elements `n..2n` are
/// reflections `s·r^k`. `dihedral(3)` is `S_3`.
pub fn dihedral(n: usize) -> CayleyTable {
    assert!(n >= 1);
    let order = 2 * n;
    let mut table = vec![0u16; order * order];
    let idx = |rot: usize, refl: bool| -> u16 { (if refl { n + rot } else { rot }) as u16 };
    // Element x acts on Z_n as t ↦ xr + t (rotation) or t ↦ xr - t
    // (reflection); the product is composition, x applied after y.
    for x in 0..order {
        let (xr, xf) = if x < n { (x, false) } else { (x - n, true) };
        for y in 0..order {
            let (yr, yf) = if y < n { (y, false) } else { (y - n, true) };
            let zf = xf ^ yf;
            let zr = if xf { (xr + n - yr) % n } else { (xr + yr) % n };
            table[x * order + y] = idx(zr, zf);
        }
    }
    CayleyTable::from_flat(order, table).expect("dihedral table is a group")
}

/// The elementary abelian 2-group `Z_2^k` (XOR on bit vectors).
pub fn elementary_abelian_2(k: usize) -> CayleyTable {
    let n = 1usize << k;
    let mut table = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            table[x * n + y] = (x ^ y) as u16;
        }
    }
    CayleyTable::from_flat(n, table).expect("xor table is a group")
}

/// The quaternion group `Q_8` on `{1, -1, i, -i, j, -j, k, -k}`.
pub fn quaternion8() -> CayleyTable {
    // Elements: 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k.
    // Represent x as (sign, axis) with axis in {1, i, j, k}.
    let axis = |x: usize| x / 2; // 0:1, 1:i, 2:j, 3:k
    let sign = |x: usize| x % 2; // 0:+, 1:-
    let enc = |s: usize, a: usize| (2 * a + s) as u16;
    // Axis product table and its sign: i*j = k, j*i = -k, etc.
    let axis_mul = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
    let sign_mul = [[0, 0, 0, 0], [0, 1, 0, 1], [0, 1, 1, 0], [0, 0, 1, 1]];
    let mut table = vec![0u16; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (ax, ay) = (axis(x), axis(y));
            let a = axis_mul[ax][ay];
            let s = (sign(x) + sign(y) + sign_mul[ax][ay]) % 2;
            table[x * 8 + y] = enc(s, a);
        }
    }
    CayleyTable::from_flat(8, table).expect("quaternion table is a group")
}

/// Direct product of two loops, with the pair `(a, b)` encoded as
/// `a * |B| + b`.
pub fn direct_product(a: &CayleyTable, b: &CayleyTable) -> CayleyTable {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = vec![0u16; n * n];
    for xa in 0..na {
        for xb in 0..nb {
            for ya in 0..na {
                for yb in 0..nb {
                    let x = xa * nb + xb;
                    let y = ya * nb + yb;
                    table[x * n + y] = (a.mul(xa, ya) * nb + b.mul(xb, yb)) as u16;
                }
            }
        }
    }
    CayleyTable::from_flat(n, table).expect("product of loops is a loop")
}

/// All group tables of order at most 8, one per isomorphism class:
/// cyclic, dihedral, elementary abelian, `S_3`, `Q_8`, and products.
pub fn small_groups_up_to_8() -> Vec<CayleyTable> {
    vec![
        cyclic(1),
        cyclic(2),
        cyclic(3),
        cyclic(4),
        elementary_abelian_2(2),
        cyclic(5),
        cyclic(6),
        dihedral(3),
        cyclic(7),
        cyclic(8),
        direct_product(&cyclic(4), &cyclic(2)),
        elementary_abelian_2(3),
        dihedral(4),
        quaternion8(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_small_groups_are_associative_loops() {
        for g in small_groups_up_to_8() {
            assert!(g.is_associative(), "not a group:\n{:?}", g);
        }
    }

    #[test]
    fn dihedral3_is_s3() {
        let s3 = dihedral(3);
        assert_eq!(s3.order(), 6);
        assert!(s3.associativity_witness().is_none());
        // Non-abelian: some pair does not commute, and AIP fails.
        assert!((0..6).any(|x| (0..6).any(|y| s3.mul(x, y) != s3.mul(y, x))));
        assert_eq!(s3.has_aip(), Ok(false));
    }

    #[test]
    fn quaternion_squares() {
        let q8 = quaternion8();
        // i² = j² = k² = -1.
        assert_eq!(q8.mul(2, 2), 1);
        assert_eq!(q8.mul(4, 4), 1);
        assert_eq!(q8.mul(6, 6), 1);
        // i·j = k, j·i = -k.
        assert_eq!(q8.mul(2, 4), 6);
        assert_eq!(q8.mul(4, 2), 7);
    }

    #[test]
    fn direct_product_z2_z2_is_klein() {
        let v4 = direct_product(&cyclic(2), &cyclic(2));
        assert_eq!(v4, elementary_abelian_2(2));
    }
}
