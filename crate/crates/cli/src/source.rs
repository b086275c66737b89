//! Parsing of poset and group arguments.

use std::fs;
use std::path::Path;

use edgeposet::figures::{diamond, fig1, fig2};
use edgeposet::io::poset_from_json;
use edgeposet::{wreath, GradedPoset, PermGroup, RootedTree};

use crate::CliError;

/// A poset from the command line. `boolean` is `Some(n)` for `bn:N`.
pub struct PosetSource {
    pub poset: GradedPoset,
    pub boolean: Option<usize>,
}

fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

fn number(what: &str, s: &str) -> Result<usize, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Input(format!("{what}: expected a non-negative integer, got {s:?}")))
}

pub fn read_tree(path: &str) -> Result<RootedTree, CliError> {
    let value: serde_json::Value =
        serde_json::from_str(&read(path)?).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    Ok(RootedTree::from_nested_json(&value)?)
}

/// `bn:N`, `chain:N`, `fig1`, `fig2`, `diamond`, `tree:FILE`, or a JSON poset file.
pub fn poset(source: &str) -> Result<PosetSource, CliError> {
    let plain = |poset| PosetSource { poset, boolean: None };
    let (head, arg) = match source.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (source, None),
    };
    match (head, arg) {
        ("bn", Some(n)) => {
            let n = number("bn", n)?;
            Ok(PosetSource {
                poset: GradedPoset::boolean_algebra(n)?,
                boolean: Some(n),
            })
        }
        ("chain", Some(n)) => Ok(plain(GradedPoset::chain(number("chain", n)?))),
        ("tree", Some(path)) => Ok(plain(read_tree(path)?.poset().clone())),
        ("fig1", None) => Ok(plain(fig1())),
        ("fig2", None) => Ok(plain(fig2())),
        ("diamond", None) => Ok(plain(diamond())),
        _ if Path::new(source).is_file() => Ok(plain(poset_from_json(&read(source)?)?)),
        _ => Err(CliError::Input(format!(
            "unknown poset {source:?}; use bn:N, chain:N, fig1, fig2, diamond, tree:FILE or a JSON file"
        ))),
    }
}

/// Builds the group named by `--group` or read from `--gens`, and checks
/// its degree against `n` when both are known.
pub fn group(family: Option<&str>, gens: Option<&str>, n: Option<usize>, cap: usize) -> Result<PermGroup, CliError> {
    let g = match (family, gens) {
        (Some(f), None) => named_group(f, n, cap)?,
        (None, Some(path)) => {
            let n = n.ok_or_else(|| CliError::Input("--gens needs --n".into()))?;
            PermGroup::from_cycle_lines(&read(path)?, n, cap)?
        }
        _ => return Err(CliError::Input("give exactly one of --group and --gens".into())),
    };
    match n {
        Some(n) if n != g.degree() => Err(CliError::Input(format!(
            "group acts on {} points but --n is {n}",
            g.degree()
        ))),
        _ => Ok(g),
    }
}

fn named_group(spec: &str, n: Option<usize>, cap: usize) -> Result<PermGroup, CliError> {
    let (family, params) = match spec.split_once(':') {
        Some((f, p)) => (f, Some(p)),
        None => (spec, None),
    };
    let size = |what: &str| -> Result<usize, CliError> {
        match params {
            Some(p) => number(what, p),
            None => n.ok_or_else(|| CliError::Input(format!("{what} needs a size: {what}:K or --n"))),
        }
    };
    let pair = |what: &str| -> Result<(usize, usize), CliError> {
        let p = params.ok_or_else(|| CliError::Input(format!("{what} needs two sizes, {what}:M,L")))?;
        let (a, b) = p
            .split_once(',')
            .ok_or_else(|| CliError::Input(format!("{what}:M,L expects two sizes, got {p:?}")))?;
        Ok((number(what, a)?, number(what, b)?))
    };
    let g = match family {
        "trivial" => PermGroup::trivial(size("trivial")?),
        "symmetric" => PermGroup::symmetric_capped(size("symmetric")?, cap)?,
        "cyclic" => PermGroup::cyclic(size("cyclic")?)?,
        "dihedral" => PermGroup::dihedral(size("dihedral")?)?,
        "hyperoctahedral" => {
            let k = match params {
                Some(p) => number("hyperoctahedral", p)?,
                None => match n {
                    Some(n) if n % 2 == 0 => n / 2,
                    _ => return Err(CliError::Input("hyperoctahedral:K acts on 2K points".into())),
                },
            };
            wreath(&PermGroup::symmetric(2)?, &PermGroup::symmetric_capped(k, cap)?, cap)?
        }
        "wreath" => {
            let (m, l) = pair("wreath")?;
            wreath(&PermGroup::symmetric_capped(m, cap)?, &PermGroup::symmetric_capped(l, cap)?, cap)?
        }
        "tree" => {
            let path = params.ok_or_else(|| CliError::Input("tree needs a file: tree:FILE".into()))?;
            read_tree(path)?.automorphisms(cap)?
        }
        _ => {
            return Err(CliError::Input(format!(
                "unknown group family {family:?}; use trivial, symmetric, cyclic, dihedral, \
                 hyperoctahedral, wreath:M,L or tree:FILE"
            )))
        }
    };
    Ok(g)
}
