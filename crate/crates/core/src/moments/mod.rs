//! Centered power-sum coordinates, Newton's identities, the normalized
//! terminal polynomials `J_{n,r}`, closed terminal-discriminant formulas,
//! and exact evaluation on root lists.

mod closed;
mod eval;
mod newton;
mod poly;
mod terminal;

pub use closed::{
    closed_cubic, closed_quadratic, closed_quartic, rescaled_terminal, ClosedFormula, FactorialPrefactor,
};
pub use eval::{centered, moment_eval, power_sums, two_level_config, TwoLevelConfig};
pub use newton::{newton_e_from_p, newton_e_table};
pub use poly::{MomentPartition, MomentPolynomial};
pub use terminal::{
    terminal_disc, terminal_disc_with_cap, terminal_polynomial, TerminalPolynomial, DEFAULT_TERMINAL_R_CAP,
};
