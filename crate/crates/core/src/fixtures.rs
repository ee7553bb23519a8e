//! Named built-in functions used across tests, docs and the CLI.

use crate::anf::AnfExpression;
use crate::boolfn::BooleanFunction;

/// The three-variable worked example x1+x2+x1x2+x2x3+x1x3. Its spectrum
/// is supported on {001, 010, 100, 111} with equal squared mass, the
/// support has full rank, and 111 is nevertheless a true structure with
/// derivative constantly 1: the standard regression fixture for the
/// full-rank-yet-structured corner case.
pub const EXAMPLE_ANF: &str = "x1+x2+x1x2+x2x3+x1x3";

/// Fixed registry names; `linear-<bits>` is additionally accepted as a
/// parameterized family, e.g. `linear-101`.
pub const FIXED_NAMES: [&str; 5] = ["paper-eq37", "bent-n2", "bent-n4", "bent-n6", "bent-n8"];

/// Looks up a built-in by registry name.
pub fn builtin(name: &str) -> Option<BooleanFunction> {
    match name {
        "paper-eq37" => Some(example_function()),
        "bent-n2" => Some(BooleanFunction::inner_product_bent(2).unwrap()),
        "bent-n4" => Some(BooleanFunction::inner_product_bent(4).unwrap()),
        "bent-n6" => Some(BooleanFunction::inner_product_bent(6).unwrap()),
        "bent-n8" => Some(BooleanFunction::inner_product_bent(8).unwrap()),
        _ => {
            let bits = name.strip_prefix("linear-")?;
            let n = bits.len() as u32;
            if n == 0 || n > crate::boolfn::MAX_VARS || !bits.bytes().all(|b| b == b'0' || b == b'1')
            {
                return None;
            }
            let a = u32::from_str_radix(bits, 2).ok()?;
            Some(BooleanFunction::linear(n, a).unwrap())
        }
    }
}

pub fn example_function() -> BooleanFunction {
    AnfExpression::parse(EXAMPLE_ANF, 3).unwrap().to_function()
}
