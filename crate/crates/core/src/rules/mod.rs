//! Social choice correspondences behind one evaluation interface.

mod catalog;
mod examples;
pub mod scoring;
mod table;

use std::collections::HashMap;

use crate::alternative::{Alternative, ChoiceSet, Universe};
use crate::domain::index_in;
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::ranking::factorial;

pub use catalog::{catalog, RuleCatalogEntry};
pub use examples::{
    example_default_size, example_rule, ExampleVariant, EXAMPLE_10_PROFILES, EXAMPLE_4_PROFILE,
    EXAMPLE_5_PROFILE, EXAMPLE_8_PROFILES, EXAMPLE_9_CATALOG,
};
pub use scoring::{borda, constant_all, copeland, dictatorship, pareto_set, plurality, tops_union};
pub use table::TableFile;

/// How a correspondence computes its value.
#[derive(Clone, Debug)]
pub enum Rule {
    Pareto,
    Tops,
    Borda,
    Plurality,
    Copeland,
    /// 0-based dictator.
    Dictator(usize),
    All,
    /// `G_P(u) \ {t}` unless `G_P(u) = {t}`.
    ParetoExcept(Alternative),
    /// The common top two at complete-agreement profiles, `G_P` elsewhere.
    AgreementTopTwo,
    /// `T` on profiles built from a fixed list of rankings, `G_P` elsewhere.
    CatalogDomain(CatalogDomain),
    Table(Table),
}

#[derive(Clone, Debug)]
pub struct CatalogDomain {
    /// Catalog slot of each ranking, indexed by lexicographic ranking index.
    slot: Vec<Option<u8>>,
    /// When true, catalog entries 0 and 1 must each occur exactly once.
    first_two_once: bool,
}

impl CatalogDomain {
    pub(crate) fn new(m: usize, catalog: &[crate::ranking::Ranking], first_two_once: bool) -> Self {
        let mut slot = vec![None; factorial(m)];
        for (k, r) in catalog.iter().enumerate() {
            slot[r.lex_index()] = Some(k as u8);
        }
        CatalogDomain {
            slot,
            first_two_once,
        }
    }

    pub fn contains(&self, u: &Profile) -> bool {
        let mut counts = [0usize; 2];
        for r in u.rankings() {
            match self.slot[r.lex_index()] {
                None => return false,
                Some(k) if k < 2 => counts[k as usize] += 1,
                Some(_) => {}
            }
        }
        !self.first_two_once || counts == [1, 1]
    }
}

/// A default rule plus explicit values at individual profiles, keyed by
/// canonical profile index.
#[derive(Clone, Debug)]
pub struct Table {
    default: Box<Rule>,
    overrides: HashMap<u64, ChoiceSet>,
}

impl Table {
    pub fn overrides(&self) -> impl Iterator<Item = (u64, ChoiceSet)> + '_ {
        self.overrides.iter().map(|(&k, &s)| (k, s))
    }

    pub fn default_rule(&self) -> &Rule {
        &self.default
    }
}

impl Rule {
    #[inline]
    fn value(&self, u: &Profile, base: u64) -> ChoiceSet {
        match self {
            Rule::Pareto => u.pareto_set(),
            Rule::Tops => u.tops(),
            Rule::Borda => borda(u),
            Rule::Plurality => plurality(u),
            Rule::Copeland => copeland(u),
            Rule::Dictator(i) => dictatorship(u, *i),
            Rule::All => constant_all(u),
            Rule::ParetoExcept(t) => {
                let gp = u.pareto_set();
                if gp == ChoiceSet::singleton(*t) {
                    gp
                } else {
                    gp.without(*t)
                }
            }
            Rule::AgreementTopTwo => {
                if u.is_unanimous() {
                    let r = u.ranking(0);
                    ChoiceSet::singleton(r.at(0)).with(r.at(1))
                } else {
                    u.pareto_set()
                }
            }
            Rule::CatalogDomain(c) => {
                if c.contains(u) {
                    u.tops()
                } else {
                    u.pareto_set()
                }
            }
            Rule::Table(t) => match t.overrides.get(&index_in(base, u)) {
                Some(&s) => s,
                None => t.default.value(u, base),
            },
        }
    }
}

/// A total map from the profile domain over `(m, n)` to non-empty subsets.
#[derive(Clone, Debug)]
pub struct Correspondence {
    name: String,
    universe: Universe,
    n: usize,
    rule: Rule,
    fixed_labels: bool,
    base: u64,
}

impl Correspondence {
    pub fn new(name: impl Into<String>, rule: Rule, universe: Universe, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Size(format!("n = {n} (need at least 2)")));
        }
        if let Rule::Dictator(i) = rule {
            if i >= n {
                return Err(Error::Config(format!("dictator {} outside 1..={n}", i + 1)));
            }
        }
        let base = factorial(universe.size()) as u64;
        Ok(Correspondence {
            name: name.into(),
            universe,
            n,
            rule,
            fixed_labels: false,
            base,
        })
    }

    /// The Pareto correspondence over `universe` with `n` individuals.
    pub fn pareto(universe: Universe, n: usize) -> Result<Self> {
        Correspondence::new("pareto", Rule::Pareto, universe, n)
    }

    /// Resolves a rule name: `pareto`, `tops`, `borda`, `plurality`,
    /// `copeland`, `dictator:<i>` (1-based), `all`, or `example:<k>[:variant]`.
    ///
    /// Plain rules get alphabetic labels; examples keep their own.
    pub fn from_name(name: &str, m: usize, n: usize) -> Result<Self> {
        let name = name.trim();
        let universe = || Universe::alphabetic(m);
        let rule = match name {
            "pareto" => Rule::Pareto,
            "tops" => Rule::Tops,
            "borda" => Rule::Borda,
            "plurality" => Rule::Plurality,
            "copeland" => Rule::Copeland,
            "all" => Rule::All,
            _ => {
                if let Some(rest) = name.strip_prefix("dictator:") {
                    let i: usize = rest
                        .parse()
                        .map_err(|_| Error::Config(format!("bad dictator index in '{name}'")))?;
                    if i == 0 {
                        return Err(Error::Config("dictators are numbered from 1".into()));
                    }
                    Rule::Dictator(i - 1)
                } else if let Some(rest) = name.strip_prefix("example:") {
                    return examples::from_name(rest, m, n);
                } else {
                    return Err(Error::Config(format!("unknown rule '{name}'")));
                }
            }
        };
        Correspondence::new(name, rule, universe()?, n)
    }

    /// `default` everywhere except at the listed profiles.
    pub fn with_overrides(
        default: Correspondence,
        overrides: impl IntoIterator<Item = (Profile, ChoiceSet)>,
    ) -> Result<Self> {
        let m = default.alternatives();
        let n = default.n;
        let mut map = HashMap::new();
        for (u, s) in overrides {
            if u.alternatives() != m || u.individuals() != n {
                return Err(Error::Mismatch(format!(
                    "override profile over (m = {}, n = {}) in a table over (m = {m}, n = {n})",
                    u.alternatives(),
                    u.individuals()
                )));
            }
            if s.is_empty() || !s.is_subset_of(ChoiceSet::full(m)) {
                return Err(Error::Config(
                    "override values must be non-empty subsets of the alternatives".into(),
                ));
            }
            map.insert(index_in(default.base, &u), s);
        }
        let name = format!("table({})", default.name);
        Ok(Correspondence {
            name,
            rule: Rule::Table(Table {
                default: Box::new(default.rule),
                overrides: map,
            }),
            ..default
        })
    }

    /// Replaces the display labels; values are unaffected.
    pub fn with_universe(mut self, universe: Universe) -> Result<Self> {
        if universe.size() != self.universe.size() {
            return Err(Error::Mismatch(format!(
                "relabeling {} alternatives with {} labels",
                self.universe.size(),
                universe.size()
            )));
        }
        self.universe = universe;
        Ok(self)
    }

    pub(crate) fn with_fixed_labels(mut self) -> Self {
        self.fixed_labels = true;
        self
    }

    pub fn rename(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn rule(&self) -> &Rule {
        &self.rule
    }

    /// True when the rule's definition refers to specific labeled
    /// alternatives, so input profiles must use its labels.
    pub fn has_fixed_labels(&self) -> bool {
        self.fixed_labels
    }

    pub fn alternatives(&self) -> usize {
        self.universe.size()
    }

    pub fn individuals(&self) -> usize {
        self.n
    }

    /// `G(u)`, after checking that `u` belongs to this correspondence's domain.
    pub fn evaluate(&self, u: &Profile) -> Result<ChoiceSet> {
        if u.alternatives() != self.alternatives() || u.individuals() != self.n {
            return Err(Error::Mismatch(format!(
                "'{}' is defined over (m = {}, n = {}); profile has (m = {}, n = {})",
                self.name,
                self.alternatives(),
                self.n,
                u.alternatives(),
                u.individuals()
            )));
        }
        Ok(self.value(u))
    }

    /// `G(u)` without the domain check.
    #[inline]
    pub fn value(&self, u: &Profile) -> ChoiceSet {
        debug_assert_eq!(u.alternatives(), self.alternatives());
        debug_assert_eq!(u.individuals(), self.n);
        self.rule.value(u, self.base)
    }

    pub fn parse_profile(&self, text: &str) -> Result<Profile> {
        Profile::parse(text, &self.universe)
    }

    pub fn format_profile(&self, u: &Profile) -> String {
        u.format(&self.universe)
    }
}
