use std::fmt;

/// Number of symbols in the coefficient ring.
pub const NSYMBOLS: usize = 15;

/// A named indeterminate of the coefficient ring.
///
/// The declaration order is the lexicographic monomial order used for
/// canonical printing and sign normalization. The last four symbols are the
/// unknowns of the bounded momentum ansatz and never appear in deformation
/// relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    R,
    Q,
    S,
    A,
    B,
    C,
    X,
    Y,
    Z,
    PAlpha,
    PBeta,
    Lambda,
    LambdaPrime,
    Nu,
    NuPrime,
}

impl Symbol {
    pub const ALL: [Symbol; NSYMBOLS] = [
        Symbol::R,
        Symbol::Q,
        Symbol::S,
        Symbol::A,
        Symbol::B,
        Symbol::C,
        Symbol::X,
        Symbol::Y,
        Symbol::Z,
        Symbol::PAlpha,
        Symbol::PBeta,
        Symbol::Lambda,
        Symbol::LambdaPrime,
        Symbol::Nu,
        Symbol::NuPrime,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::R => "r",
            Symbol::Q => "q",
            Symbol::S => "s",
            Symbol::A => "a",
            Symbol::B => "b",
            Symbol::C => "c",
            Symbol::X => "x",
            Symbol::Y => "y",
            Symbol::Z => "z",
            Symbol::PAlpha => "palpha",
            Symbol::PBeta => "pbeta",
            Symbol::Lambda => "lam",
            Symbol::LambdaPrime => "lamp",
            Symbol::Nu => "nu",
            Symbol::NuPrime => "nup",
        }
    }

    pub fn from_name(name: &str) -> Option<Symbol> {
        Symbol::ALL.iter().copied().find(|s| s.name() == name)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Symbol::ALL {
            assert_eq!(Symbol::from_name(s.name()), Some(s));
        }
        assert_eq!(Symbol::from_name("th1"), None);
    }

    #[test]
    fn index_matches_declaration_order() {
        for (i, s) in Symbol::ALL.iter().enumerate() {
            assert_eq!(s.index(), i);
        }
    }
}
