use std::cell::OnceCell;

use crate::classify::{is_intra_regular, is_regular, is_zero_degenerate};
use crate::elemset::ElemSet;
use crate::green::{green_partition, Relation, RelationPartition};
use crate::idealprops::{profile_in, IdealProfile};
use crate::ideals::{enumerate_ideals, enumerate_subsemigroups, IdealKind};
use crate::semigroup::Semigroup;

/// Lazily computed facts about one semigroup, shared by every theorem
/// checked against it.
pub(crate) struct Analysis<'a> {
    pub s: &'a Semigroup,
    families: [OnceCell<Vec<ElemSet>>; 6],
    subsemigroups: OnceCell<Vec<ElemSet>>,
    profiles: OnceCell<Vec<IdealProfile>>,
    partitions: [OnceCell<RelationPartition>; 5],
    regular: OnceCell<bool>,
    intra: OnceCell<bool>,
    duo: OnceCell<bool>,
    degenerate: OnceCell<bool>,
}

fn kind_slot(k: IdealKind) -> usize {
    IdealKind::ALL
        .iter()
        .position(|&x| x == k)
        .expect("kind listed")
}

fn relation_slot(r: Relation) -> usize {
    Relation::ALL
        .iter()
        .position(|&x| x == r)
        .expect("relation listed")
}

impl<'a> Analysis<'a> {
    pub fn new(s: &'a Semigroup) -> Self {
        Analysis {
            s,
            families: Default::default(),
            subsemigroups: OnceCell::new(),
            profiles: OnceCell::new(),
            partitions: Default::default(),
            regular: OnceCell::new(),
            intra: OnceCell::new(),
            duo: OnceCell::new(),
            degenerate: OnceCell::new(),
        }
    }

    pub fn family(&self, k: IdealKind) -> &[ElemSet] {
        self.families[kind_slot(k)].get_or_init(|| enumerate_ideals(self.s, k))
    }

    pub fn interior(&self) -> &[ElemSet] {
        self.family(IdealKind::Interior)
    }

    pub fn subsemigroups(&self) -> &[ElemSet] {
        self.subsemigroups
            .get_or_init(|| enumerate_subsemigroups(self.s))
    }

    /// Profiles aligned with [`Analysis::interior`].
    pub fn profiles(&self) -> &[IdealProfile] {
        self.profiles.get_or_init(|| {
            let fam = self.interior();
            fam.iter().map(|i| profile_in(self.s, fam, i)).collect()
        })
    }

    pub fn partition(&self, r: Relation) -> &RelationPartition {
        self.partitions[relation_slot(r)].get_or_init(|| green_partition(self.s, r))
    }

    pub fn regular(&self) -> bool {
        *self.regular.get_or_init(|| is_regular(self.s).is_some())
    }

    pub fn intra_regular(&self) -> bool {
        *self
            .intra
            .get_or_init(|| is_intra_regular(self.s).is_some())
    }

    pub fn duo(&self) -> bool {
        *self
            .duo
            .get_or_init(|| self.family(IdealKind::Left) == self.family(IdealKind::Right))
    }

    pub fn zero_degenerate(&self) -> bool {
        *self.degenerate.get_or_init(|| is_zero_degenerate(self.s))
    }
}
