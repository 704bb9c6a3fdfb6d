//! Named families, parsed from `gen` arguments.

use logtw_core::detect::clique_number;
use logtw_core::generators as gen;
use logtw_core::Graph;

use crate::error::CliError;

pub const FAMILIES: &str = "path N | cycle N | clique N | bipartite A B | star K | petersen | wall K | \
theta L1 L2 L3 | pyramid L1 L2 L3 | prism L1 L2 L3 | pinched-prism L1 L2 | cube | random N P | \
class N P T | wheel L I.. | wheels L I,J,.. [I,J,..]";

fn arg<T: std::str::FromStr>(args: &[String], i: usize, what: &str) -> Result<T, CliError> {
    let s = args
        .get(i)
        .ok_or_else(|| CliError::Parse(format!("missing {what}")))?;
    s.parse().map_err(|_| CliError::Parse(format!("bad {what} {s:?}")))
}

fn arity(family: &str, args: &[String], k: usize) -> Result<(), CliError> {
    if args.len() != k {
        return Err(CliError::Parse(format!("{family} takes {k} arguments, got {}", args.len())));
    }
    Ok(())
}

/// A hole `0..l` plus one vertex adjacent to the listed hole positions.
pub fn wheel(l: usize, spokes: &[usize]) -> Result<Graph, CliError> {
    if l < 4 {
        return Err(CliError::Parse("wheel needs a hole of length at least 4".into()));
    }
    let mut es = gen::cycle(l).edges();
    for &s in spokes {
        if s >= l {
            return Err(CliError::Parse(format!("spoke {s} outside the hole")));
        }
        es.push((s, l));
    }
    Ok(Graph::from_edges(l + 1, &es)?)
}

/// A hole `0..l` with one hub per spoke list; the second hub's spokes are
/// shifted by `l / 2`.
pub fn wheels(l: usize, hubs: &[Vec<usize>]) -> Result<Graph, CliError> {
    if l < 4 {
        return Err(CliError::Parse("wheels needs a hole of length at least 4".into()));
    }
    let mut es = gen::cycle(l).edges();
    for (h, spokes) in hubs.iter().enumerate() {
        es.extend(spokes.iter().map(|&s| ((s + h * (l / 2)) % l, l + h)));
    }
    Ok(Graph::from_edges(l + hubs.len(), &es)?)
}

/// The graph named by `family` and `args`. `random` and `class` use `seed`.
pub fn generate(family: &str, args: &[String], seed: u64) -> Result<Graph, CliError> {
    let a = |i, w| arg::<usize>(args, i, w);
    let need = |k| arity(family, args, k);
    let g = match family {
        "path" => {
            need(1)?;
            gen::path(a(0, "length")?)
        }
        "cycle" => {
            need(1)?;
            let n = a(0, "length")?;
            if n < 3 {
                return Err(CliError::Parse("cycle needs at least 3 vertices".into()));
            }
            gen::cycle(n)
        }
        "clique" => {
            need(1)?;
            gen::clique(a(0, "size")?)
        }
        "bipartite" => {
            need(2)?;
            gen::complete_bipartite(a(0, "side")?, a(1, "side")?)
        }
        "star" => {
            need(1)?;
            gen::star(a(0, "leaves")?)
        }
        "petersen" => {
            need(0)?;
            gen::petersen()
        }
        "cube" => {
            need(0)?;
            gen::cube()
        }
        "wall" => {
            need(1)?;
            gen::wall(a(0, "size")?)?
        }
        "theta" | "pyramid" | "prism" => {
            need(3)?;
            let (x, y, z) = (a(0, "length")?, a(1, "length")?, a(2, "length")?);
            match family {
                "theta" => gen::theta(x, y, z)?,
                "pyramid" => gen::pyramid(x, y, z)?,
                _ => gen::prism(x, y, z)?,
            }
        }
        "pinched-prism" => {
            need(2)?;
            gen::pinched_prism(a(0, "length")?, a(1, "length")?)?
        }
        "random" => {
            need(2)?;
            gen::random_graph(a(0, "size")?, arg(args, 1, "probability")?, seed)?
        }
        "class" => {
            need(3)?;
            let (n, p, t) = (a(0, "size")?, arg(args, 1, "probability")?, a(2, "t")?);
            gen::random_in_class(n, p, t, seed, 500)?
                .ok_or_else(|| CliError::Other(format!("no class member found in 500 samples of G({n}, {p})")))?
        }
        "wheel" => {
            let spokes = (1..args.len()).map(|i| a(i, "spoke")).collect::<Result<Vec<_>, _>>()?;
            wheel(a(0, "length")?, &spokes)?
        }
        "wheels" => {
            if !(2..=3).contains(&args.len()) {
                return Err(CliError::Parse("wheels takes a length and one or two spoke lists".into()));
            }
            let lists = args[1..]
                .iter()
                .map(|l| {
                    l.split(',')
                        .map(|x| x.parse().map_err(|_| CliError::Parse(format!("bad spoke list {l:?}"))))
                        .collect::<Result<Vec<usize>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            wheels(a(0, "length")?, &lists)?
        }
        _ => return Err(CliError::Parse(format!("unknown family {family:?}; expected {FAMILIES}"))),
    };
    Ok(g)
}

/// The smallest `t ≥ 3` with `g` free of `K_t`.
pub fn default_t(g: &Graph) -> usize {
    (clique_number(g) + 1).max(3)
}
