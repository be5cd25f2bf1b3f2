//! Unicode rendering for text reports: `𝕋⁶₀₉`, `Δ₁₄`, `𝔑₃`.

const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn map_digits(s: &str, table: &[char; 10]) -> String {
    s.chars()
        .map(|c| match c.to_digit(10) {
            Some(d) => table[d as usize],
            None if c == '-' => if table == &SUB { '₋' } else { '⁻' },
            None => c,
        })
        .collect()
}

pub fn subscript(s: &str) -> String {
    map_digits(s, &SUB)
}

pub fn superscript(s: &str) -> String {
    map_digits(s, &SUP)
}

/// `Δ₁₄` for the 0-based pair `(0, 3)`.
pub fn delta(i: usize, j: usize) -> String {
    format!("Δ{}{}", subscript(&(i + 1).to_string()), subscript(&(j + 1).to_string()))
}
