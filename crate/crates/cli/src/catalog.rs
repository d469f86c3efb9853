//! Named built-in structures, bundled scenarios and check descriptions.

use std::collections::BTreeSet;

use pmha_core::algebra::{named_idempotent, Algebra, CornerAlgebra, SubAlgebra};
use pmha_core::group_correspondence::{inversion_action, signed_conjugation_corner, PartialGroupAction};
use pmha_core::mha::MhaInstance;
use pmha_core::partial_action::{global_pointwise, normal_subgroup_corner, PartialActionData};
use pmha_core::partial_coaction::{PartialCoactionData, DEFAULT_BOUND};
use pmha_core::{GroupSpec, Vector};

use crate::scenario::CheckSpec;
use crate::CliError;

/// Scenarios shipped with the binary, addressable as `scenario:<name>`.
pub const BUNDLED: &[(&str, &str)] = &[
    ("coaction_trivial", include_str!("../scenarios/coaction_trivial.toml")),
    ("convolution_S3", include_str!("../scenarios/convolution_S3.toml")),
    ("example_fN_S3", include_str!("../scenarios/example_fN_S3.toml")),
    ("group_correspondence_S3", include_str!("../scenarios/group_correspondence_S3.toml")),
    ("inconclusive_quasi_unit", include_str!("../scenarios/inconclusive_quasi_unit.toml")),
    ("mutation_antipode", include_str!("../scenarios/mutation_antipode.toml")),
];

const IDEMPOTENTS: &[&str] = &["one", "fN", "ftriv", "fsign", "fnotsign"];

const KINDS: &[(&str, &str)] = &[
    ("convolution", "instance A, target R-instance, samples (default 100): (F∗G)∗H = F∗(G∗H) on seeded random triples in Hom^r(A, R), each product also recomputed through T1⁻¹."),
    ("convolutive_inverse", "instance, candidate = antipode | identity: checks candidate(_b)∗ʳid(_a) = u_a∘ε and its left twin on every basis test element."),
    ("coglobalization", "coaction, bound (default 512): builds ((Q, ι⊗Δ), θ, π) with e = the group identity and checks the enveloping coaction items and the E-projection equation."),
    ("envelope", "action, max_size (default 6): builds the standard envelope of a symmetric partial action and checks the enveloping items and minimality."),
    ("global", "action, max_size (default 6): whether 𝔢(a) = ε(a)1 and the action is a module algebra action."),
    ("group", "group: group axioms on the window."),
    ("mha_axioms", "instance, mutate = delta | counit | antipode (optional): coassociativity, counit, antipode, T1/T2 round trips, regularity and morphism checks."),
    ("module_algebra", "instance A, target R-instance, samples (default 4): a▷(b▷F) = ab▷F, local units, and a▷(F∗G) = (a₁▷F)∗(a₂▷G) on seeded random samples."),
    ("partial_action", "action: items (i) to (iv) of a partial module algebra."),
    ("partial_coaction", "coaction: the covered partial comodule algebra axioms, E² = E, Eρ(x) = ρ(x) = ρ(x)E, (ι⊗ε)ρ(x) = x and ρ(L)(1⊗A) = E(L⊗A)."),
    ("pga", "pga: partial group action axioms, σ conditions, globalizability and the round trip through 𝕜G."),
    ("quasi_counitary", "instance, e = identity | nonidentity: e central idempotent with Δ(e)(e⊗1) = e⊗e and ε(e) = 1."),
    ("quasi_unitary", "action, max_size (default 6): bounded search for b with b·x = x and ab·x = a·x on the target basis."),
    ("symmetric", "action: items (v) to (vii) of a symmetric partial action; needs a regular instance."),
];

/// Description of a check kind.
pub fn explain(kind: &str) -> Option<&'static str> {
    KINDS.iter().find(|(k, _)| *k == kind).map(|(_, d)| *d)
}

/// Every built-in name, sorted.
pub fn list_builtin() -> Vec<String> {
    let mut out = BTreeSet::new();
    for g in ["cyclic:1", "cyclic:2", "cyclic:4", "symmetric:3", "integers"] {
        out.insert(format!("group:{g}"));
        out.insert(format!("A_G:{g}"));
        out.insert(format!("kG:{g}"));
    }
    for a in ["fN:symmetric:3", "pointwise:cyclic:4", "pointwise:symmetric:3", "pointwise:integers"] {
        out.insert(format!("action:{a}"));
    }
    for c in ["trivial:symmetric:3:fnotsign", "trivial:cyclic:2", "group_action:signed_conjugation", "group_action:inversion:4", "grading:cyclic:4"] {
        out.insert(format!("coaction:{c}"));
    }
    for p in ["signed_conjugation", "inversion:4", "trivial"] {
        out.insert(format!("pga:{p}"));
    }
    for (k, _) in KINDS {
        out.insert(format!("check:{k}"));
    }
    for (s, _) in BUNDLED {
        out.insert(format!("scenario:{s}"));
    }
    out.into_iter().collect()
}

fn core(e: pmha_core::Error) -> CliError {
    CliError::Reference(e.to_string())
}

pub fn resolve_group(s: &str) -> Result<GroupSpec, CliError> {
    GroupSpec::parse(s).map_err(core)
}

pub fn resolve_instance(s: &str) -> Result<MhaInstance, CliError> {
    MhaInstance::parse(s).map_err(core)
}

/// `fN:symmetric:n` (N the alternating subgroup) or `pointwise:<group>`.
pub fn resolve_action(s: &str) -> Result<PartialActionData, CliError> {
    if let Some(g) = s.strip_prefix("fN:") {
        let g = resolve_group(g)?;
        if !g.name().starts_with("symmetric:") {
            return Err(CliError::Reference(format!("'{s}': fN needs a symmetric group")));
        }
        return normal_subgroup_corner(&g, &g.alternating_subgroup()).map_err(core);
    }
    if let Some(g) = s.strip_prefix("pointwise:") {
        return Ok(global_pointwise(&resolve_group(g)?));
    }
    Err(CliError::Reference(format!("unknown action '{s}'")))
}

pub fn resolve_pga(s: &str) -> Result<PartialGroupAction, CliError> {
    match s {
        "signed_conjugation" => signed_conjugation_corner().map_err(core),
        "trivial" => {
            let g = GroupSpec::cyclic(1);
            let alg = Algebra::group_algebra(&g);
            PartialGroupAction::global("trivial", &g, SubAlgebra::full(&alg, 0), |_, x| x.clone()).map_err(core)
        }
        _ => match s.strip_prefix("inversion:").and_then(|n| n.parse::<u32>().ok()) {
            Some(n) if n > 0 => inversion_action(n).map_err(core),
            _ => Err(CliError::Reference(format!("unknown partial group action '{s}'"))),
        },
    }
}

/// `trivial:<group>[:<idempotent>]`, `group_action:<pga>` or `grading:<group>`.
pub fn resolve_coaction(s: &str) -> Result<PartialCoactionData, CliError> {
    if let Some(rest) = s.strip_prefix("trivial:") {
        let (g, idem) = match rest.rsplit_once(':') {
            Some((g, i)) if IDEMPOTENTS.contains(&i) => (g, Some(i)),
            _ => (rest, None),
        };
        let g = resolve_group(g)?;
        let alg = Algebra::group_algebra(&g);
        let target = match idem {
            Some(i) => {
                let f = named_idempotent(&alg, i).map_err(core)?;
                CornerAlgebra::new(&alg, &f, i).map_err(core)?.subalgebra()
            }
            None => SubAlgebra::full(&alg, 0),
        };
        return PartialCoactionData::trivial(target, &g).map_err(core);
    }
    if let Some(p) = s.strip_prefix("group_action:") {
        return PartialCoactionData::from_group_action(&resolve_pga(p)?).map_err(core);
    }
    if let Some(g) = s.strip_prefix("grading:") {
        return PartialCoactionData::grading(&resolve_group(g)?).map_err(core);
    }
    Err(CliError::Reference(format!("unknown coaction '{s}'")))
}

/// A resolved check, ready to run.
pub enum Job {
    Group(GroupSpec),
    MhaAxioms(MhaInstance),
    Convolution { m: MhaInstance, r: Algebra, samples: usize },
    ModuleAlgebra { m: MhaInstance, r: Algebra, samples: usize },
    ConvolutiveInverse { m: MhaInstance, identity: bool },
    PartialAction(PartialActionData),
    Symmetric(PartialActionData),
    Global(PartialActionData, usize),
    QuasiUnitary(PartialActionData, usize),
    Envelope(PartialActionData, usize),
    Pga(PartialGroupAction),
    PartialCoaction(PartialCoactionData),
    QuasiCounitary(MhaInstance, Vector),
    Coglobalization(PartialCoactionData, usize),
}

fn target_algebra(c: &CheckSpec) -> Result<Algebra, CliError> {
    Ok(resolve_instance(c.field("target", &c.target)?)?.algebra().clone())
}

/// Resolves every reference of a check.
pub fn resolve_check(c: &CheckSpec) -> Result<Job, CliError> {
    let max_size = c.max_size.unwrap_or(6);
    Ok(match c.kind.as_str() {
        "group" => Job::Group(resolve_group(c.field("group", &c.group)?)?),
        "mha_axioms" => {
            let m = resolve_instance(c.field("instance", &c.instance)?)?;
            match &c.mutate {
                Some(w) => Job::MhaAxioms(m.mutated(w).map_err(core)?),
                None => Job::MhaAxioms(m),
            }
        }
        "convolution" => Job::Convolution {
            m: resolve_instance(c.field("instance", &c.instance)?)?,
            r: target_algebra(c)?,
            samples: c.samples.unwrap_or(100),
        },
        "module_algebra" => Job::ModuleAlgebra {
            m: resolve_instance(c.field("instance", &c.instance)?)?,
            r: target_algebra(c)?,
            samples: c.samples.unwrap_or(4),
        },
        "convolutive_inverse" => {
            let m = resolve_instance(c.field("instance", &c.instance)?)?;
            let identity = match c.field("candidate", &c.candidate)? {
                "antipode" => false,
                "identity" => true,
                other => return Err(CliError::Reference(format!("unknown candidate '{other}'"))),
            };
            Job::ConvolutiveInverse { m, identity }
        }
        "partial_action" => Job::PartialAction(resolve_action(c.field("action", &c.action)?)?),
        "symmetric" => Job::Symmetric(resolve_action(c.field("action", &c.action)?)?),
        "global" => Job::Global(resolve_action(c.field("action", &c.action)?)?, max_size),
        "quasi_unitary" => Job::QuasiUnitary(resolve_action(c.field("action", &c.action)?)?, max_size),
        "envelope" => Job::Envelope(resolve_action(c.field("action", &c.action)?)?, max_size),
        "pga" => Job::Pga(resolve_pga(c.field("pga", &c.pga)?)?),
        "partial_coaction" => Job::PartialCoaction(resolve_coaction(c.field("coaction", &c.coaction)?)?),
        "quasi_counitary" => {
            let m = resolve_instance(c.field("instance", &c.instance)?)?;
            let g = m.group().clone();
            let els = g
                .elements()
                .ok_or_else(|| CliError::Reference(format!("{}: quasi counitarity needs a finite group", m.name())))?;
            let e = match c.field("e", &c.e)? {
                "identity" => g.identity(),
                "nonidentity" => els
                    .iter()
                    .find(|t| !g.is_identity(t))
                    .cloned()
                    .ok_or_else(|| CliError::Reference("the trivial group has no non-identity element".into()))?,
                other => return Err(CliError::Reference(format!("unknown element '{other}'"))),
            };
            Job::QuasiCounitary(m, Vector::unit(e))
        }
        "coglobalization" => Job::Coglobalization(
            resolve_coaction(c.field("coaction", &c.coaction)?)?,
            c.bound.unwrap_or(DEFAULT_BOUND),
        ),
        other => return Err(CliError::Reference(format!("unknown check kind '{other}'"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_contents_and_order() {
        let l = list_builtin();
        assert!(l.contains(&"A_G:symmetric:3".to_string()));
        assert!(l.contains(&"scenario:coaction_trivial".to_string()));
        let mut sorted = l.clone();
        sorted.sort();
        assert_eq!(l, sorted);
        assert_eq!(l, list_builtin());
    }

    #[test]
    fn every_listed_structure_resolves() {
        for name in list_builtin() {
            let (kind, rest) = name.split_once(':').unwrap();
            let ok = match kind {
                "group" => resolve_group(rest).is_ok(),
                "A_G" | "kG" => resolve_instance(&name).is_ok(),
                "action" => resolve_action(rest).is_ok(),
                "coaction" => resolve_coaction(rest).is_ok(),
                "pga" => resolve_pga(rest).is_ok(),
                "check" => explain(rest).is_some(),
                "scenario" => BUNDLED.iter().any(|(n, _)| *n == rest),
                _ => false,
            };
            assert!(ok, "{name}");
        }
    }
}
