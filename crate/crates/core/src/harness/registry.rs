use std::fmt;
use std::str::FromStr;

use crate::error::Error;

macro_rules! theorems {
    ($($variant:ident => $key:literal, $text:literal;)*) => {
        /// Every checkable statement, keyed by a stable string id.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $($variant,)*
        }

        impl TheoremId {
            /// Registry order, which is also report order.
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $key,)*
                }
            }

            /// One-line statement of what is checked.
            pub fn statement(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $text,)*
                }
            }
        }
    };
}

theorems! {
    IdealIsInterior => "T-IDEAL-IS-INTERIOR",
        "every two-sided ideal is an interior ideal";
    Intersection => "T-INTERSECTION",
        "a nonempty intersection of interior ideals is an interior ideal";
    Relative => "T-RELATIVE",
        "for an interior ideal I and subsemigroup T, a nonempty I∩T is an interior ideal of T";
    RegSis => "T-REG-SIS",
        "regular S: I = SIS for every interior ideal I";
    RegEquivQjq => "T-REG-EQUIV-QJQ",
        "regular ⇔ Q∩J = QJQ (quasi Q, ideal J) ⇔ Q∩I = QIQ (quasi Q, interior I) ⇔ I∩B = BIB (interior I, bi B)";
    RegEquivBil => "T-REG-EQUIV-BIL",
        "regular ⇔ B∩I∩L ⊆ BIL ⇔ Q∩I∩L ⊆ QIL ⇔ B∩I∩R ⊆ RIB ⇔ Q∩I∩R ⊆ RIQ";
    RegCoincide => "T-REG-COINCIDE",
        "regular S: ideals and interior ideals coincide";
    IntraCoincide => "T-INTRA-COINCIDE",
        "intra-regular S: ideals and interior ideals coincide";
    IntraSemiprime => "T-INTRA-SEMIPRIME",
        "intra-regular S: every proper interior ideal is semiprime";
    IntraCompsemiIff => "T-INTRA-COMPSEMI-IFF",
        "intra-regular ⇔ every interior ideal is completely semiprime";
    DuoBi => "T-DUO-BI",
        "regular duo S: every bi-ideal is an interior ideal";
    DuoQuasi => "T-DUO-QUASI",
        "regular duo S: every quasi-ideal is an interior ideal";
    SimpleIff => "T-SIMPLE-IFF",
        "interior-simple ⇔ SaS = S for all nonzero a ⇔ IN(a) = S for all nonzero a";
    SirrSp => "T-SIRR-SP",
        "a strongly irreducible semiprime interior ideal is strongly prime";
    ZornWitness => "T-ZORN-WITNESS",
        "for an interior ideal I and a ∉ I there is an irreducible interior ideal B ⊇ I with a ∉ B";
    IdempotentEquiv => "T-IDEMPOTENT-EQUIV",
        "regular S: all I² = I ⇔ I₁∩I₂ = I₁I₂∩I₂I₁ ⇔ all semiprime ⇔ proper ideals are meets of irreducible semiprime ones";
    ChainEquiv => "T-CHAIN-EQUIV",
        "interior ideals form a chain ⇔ all strongly irreducible ⇔ all irreducible";
    MinIff => "T-MIN-IFF",
        "I minimal ⇔ I = SaS for all nonzero a ∈ I ⇔ I = IN(a) for all nonzero a ∈ I";
    MinDisjoint => "T-MIN-DISJOINT",
        "every proper interior ideal minimal ⇔ distinct proper interior ideals meet trivially";
    MinInab => "T-MIN-INAB",
        "I minimal ⇔ IN(a) = IN(b) for all nonzero a, b ∈ I";
    JSubI => "T-J-SUB-I",
        "𝓙 ⊆ 𝓘";
    RegJi => "T-REG-JI",
        "regular or intra-regular S: 𝓙 = 𝓘";
    MinIclass => "T-MIN-ICLASS",
        "I minimal ⇔ I is an 𝓘-class";
    MinJclass => "T-MIN-JCLASS",
        "regular S: I minimal ⇔ I is a 𝓙-class";
    InLeast => "P-IN-LEAST",
        "probe: IN(a) is the least interior ideal containing a";
    ProdReg => "P-PROD-REG",
        "probe: regular S: I₁I₂ is an interior ideal for interior ideals I₁, I₂";
}

impl TheoremId {
    /// Statements quantified over nonzero elements or minimal ideals, whose
    /// literal reading can break on zero-degenerate semigroups.
    pub fn zero_sensitive(self) -> bool {
        matches!(
            self,
            TheoremId::SimpleIff
                | TheoremId::MinIff
                | TheoremId::MinDisjoint
                | TheoremId::MinInab
                | TheoremId::MinIclass
                | TheoremId::MinJclass
        )
    }

    pub fn is_probe(self) -> bool {
        self.as_str().starts_with("P-")
    }

    /// Parses a comma-separated list, or `all`.
    pub fn parse_list(list: &str) -> Result<Vec<TheoremId>, Error> {
        if list.trim() == "all" {
            return Ok(TheoremId::ALL.to_vec());
        }
        list.split(',').map(|s| s.trim().parse()).collect()
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}
