//! Small algebras used by tests, benchmarks and the command line examples.

pub const LINEAR_N2: &str = include_str!("../fixtures/linear_n2.qa");
pub const COMMUTATIVE_SQUARE: &str = include_str!("../fixtures/commutative_square.qa");
pub const HEREDITARY_A2: &str = include_str!("../fixtures/hereditary_a2.qa");
pub const DUAL_NUMBERS: &str = include_str!("../fixtures/dual_numbers.qa");
pub const SEMISIMPLE: &str = include_str!("../fixtures/semisimple.qa");

/// Linear quiver `1 <- 2 <- ... <- n+1` with arrows `b_i : i+1 -> i` and all
/// relations `b_i*b_(i+1)`, so the radical squares to zero.
pub fn linear_radical_square_zero(n: usize) -> String {
    let mut text = String::from("field Q\nvertices");
    for v in 1..=n + 1 {
        text.push_str(&format!(" {v}"));
    }
    text.push('\n');
    for i in 1..=n {
        text.push_str(&format!("arrow b{i} : {} -> {i}\n", i + 1));
    }
    for i in 1..n {
        text.push_str(&format!("relation b{i}*b{}\n", i + 1));
    }
    text
}
