use std::fmt;

use thiserror::Error;

/// A triple `(i, j, k)` whose two parenthesizations disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AssociativityViolation {
    pub triple: (usize, usize, usize),
    /// `(i·j)·k`
    pub lhs: usize,
    /// `i·(j·k)`
    pub rhs: usize,
}

impl fmt::Display for AssociativityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(
            f,
            "({i},{j},{k}): ({i}·{j})·{k} = {} but {i}·({j}·{k}) = {}",
            self.lhs, self.rhs
        )
    }
}

/// Structural problems with a Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table has no elements")]
    Empty,
    #[error("order {0} exceeds the supported maximum of 64")]
    TooLarge(usize),
    #[error("expected {expected} element names, found {found}")]
    NameCount { expected: usize, found: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("row {row} has {len} entries, expected {expected}")]
    NonSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry ({row},{col}) = {value} is outside 0..{order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not associative at {0}")]
    NotAssociative(AssociativityViolation),
    #[error("declared zero {0} is not absorbing")]
    ZeroNotAbsorbing(usize),
}

/// What went wrong while reading a `.sg` document.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `elements:` line")]
    MissingElements,
    #[error("missing `table:` section")]
    MissingTable,
    #[error("`elements:` declared twice")]
    DuplicateElements,
    #[error("`elements:` lists no tokens")]
    NoElements,
    #[error("duplicate element token `{0}`")]
    DuplicateToken(String),
    #[error("`{0}` must follow `elements:`")]
    OutOfOrder(&'static str),
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    #[error("malformed `zero:` line")]
    BadZero,
    #[error("unexpected line `{0}`")]
    UnexpectedLine(String),
    #[error("table row has {found} entries, expected {expected}")]
    RowLength { expected: usize, found: usize },
    #[error("table has {found} rows, expected {expected}")]
    RowCount { expected: usize, found: usize },
    #[error("order {0} exceeds the supported maximum of 64")]
    TooLarge(usize),
    #[error("not associative: {0}")]
    NotAssociative(Box<NamedViolation>),
    #[error("declared zero `{0}` is not absorbing")]
    ZeroNotAbsorbing(String),
}

/// An associativity violation spelled with element tokens.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("({a}·{b})·{c} = {lhs} but {a}·({b}·{c}) = {rhs}")]
pub struct NamedViolation {
    pub a: String,
    pub b: String,
    pub c: String,
    pub lhs: String,
    pub rhs: String,
    pub violation: AssociativityViolation,
}

/// A `.sg` parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

/// Precondition failures of the analysis operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a nonempty set")]
    EmptySet,
    #[error("set width {found} does not match semigroup order {expected}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("set is not an interior ideal")]
    NotInteriorIdeal,
    #[error("set is not a subsemigroup")]
    NotSubsemigroup,
    #[error("intersection is empty")]
    EmptyIntersection,
    #[error("element {0} already lies in the ideal")]
    ElementInIdeal(usize),
    #[error("ideal is not proper")]
    NotProper,
    #[error("maximal avoiding ideal {0:?} failed the irreducibility re-check")]
    WitnessNotIrreducible(crate::ElemSet),
    #[error("partitions cover carriers of different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("order {0} is outside the supported range 1..=6")]
    UnsupportedOrder(usize),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
