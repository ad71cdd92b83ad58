use std::collections::BTreeSet;
use std::path::Path;

use geomgraph::chroma;
use geomgraph::complex::{self, parse_complex, RaiseMode, RegionData};
use geomgraph::discharge::{self, R1Scope};
use geomgraph::graph::{self, parse_graph, EarDecomposition};
use geomgraph::minor::{self, MinorModel};
use geomgraph::topo::{self, Coefficients, Tri, Verdict};
use geomgraph::{CellComplex, CellId, Edge, Error, Graph, Result};
use serde::de::DeserializeOwned;
use serde_json::json;

use crate::output::{Outcome, RunManifest, EXIT_BUDGET, EXIT_NEGATIVE, EXIT_OK};
use crate::{CertifyCmd, ColorCmd, ComplexCmd, DischargeCmd, GraphCmd, Group, MinorCmd, ModeArg, ScopeArg, WitnessKind};

pub fn group_name(g: &Group) -> &'static str {
    match g {
        Group::Graph(_) => "graph",
        Group::Minor(_) => "minor",
        Group::Complex(_) => "complex",
        Group::Certify(_) => "certify",
        Group::Color(_) => "color",
        Group::Discharge(_) => "discharge",
    }
}

pub fn command_name(g: &Group) -> String {
    let sub = match g {
        Group::Graph(c) => match c {
            GraphCmd::Connectivity { .. } => "connectivity",
            GraphCmd::Contract { .. } => "contract",
            GraphCmd::Contractible { .. } => "contractible",
            GraphCmd::Bridges { .. } => "bridges",
            GraphCmd::Ears { .. } => "ears",
            GraphCmd::Sdecomp { .. } => "sdecomp",
            GraphCmd::Layers { .. } => "layers",
            GraphCmd::StackedPlanar { .. } => "stacked-planar",
        },
        Group::Minor(c) => match c {
            MinorCmd::Clique { .. } => "clique",
            MinorCmd::Bipartite { .. } => "bipartite",
            MinorCmd::Pattern { .. } => "pattern",
            MinorCmd::Verify { .. } => "verify",
            MinorCmd::Sample { .. } => "sample",
        },
        Group::Complex(c) => match c {
            ComplexCmd::Raise { .. } => "raise",
            ComplexCmd::Witness { .. } => "witness",
            ComplexCmd::Regions { .. } => "regions",
            ComplexCmd::Closed { .. } => "closed",
            ComplexCmd::Faces { .. } => "faces",
            ComplexCmd::Ears { .. } => "ears",
        },
        Group::Certify(c) => match c {
            CertifyCmd::Betti { .. } => "betti",
            CertifyCmd::Pi1 { .. } => "pi1",
            CertifyCmd::Sphere { .. } => "sphere",
            CertifyCmd::Standalone { .. } => "standalone",
        },
        Group::Color(c) => match c {
            ColorCmd::Greedy { .. } => "greedy",
            ColorCmd::Exact { .. } => "exact",
            ColorCmd::AverageDegree { .. } => "average-degree",
            ColorCmd::Bound { .. } => "bound",
            ColorCmd::Audit { .. } => "audit",
        },
        Group::Discharge(c) => match c {
            DischargeCmd::Run { .. } => "run",
            DischargeCmd::Color { .. } => "color",
            DischargeCmd::Dual { .. } => "dual",
            DischargeCmd::Quanhe { .. } => "quanhe",
            DischargeCmd::Reducibility { .. } => "reducibility",
        },
    };
    format!("{} {sub}", group_name(g))
}

fn load_graph(m: &mut RunManifest, path: &Path) -> Result<Graph> {
    parse_graph(&m.read(path)?)
}

fn load_complex(m: &mut RunManifest, path: &Path) -> Result<CellComplex> {
    parse_complex(&m.read(path)?)
}

fn load_json<T: DeserializeOwned>(m: &mut RunManifest, path: &Path) -> Result<T> {
    let text = m.read(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        position: format!("{} line {} column {}", path.display(), e.line(), e.column()),
        message: e.to_string(),
    })
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Certified => EXIT_OK,
        Verdict::Refuted => EXIT_NEGATIVE,
        Verdict::Inconclusive => EXIT_BUDGET,
    }
}

pub fn run(group: &Group, m: &mut RunManifest) -> Result<Outcome> {
    match group {
        Group::Graph(c) => run_graph(c, m),
        Group::Minor(c) => run_minor(c, m),
        Group::Complex(c) => run_complex(c, m),
        Group::Certify(c) => run_certify(c, m),
        Group::Color(c) => run_color(c, m),
        Group::Discharge(c) => run_discharge(c, m),
    }
}

fn run_graph(cmd: &GraphCmd, m: &mut RunManifest) -> Result<Outcome> {
    match cmd {
        GraphCmd::Connectivity { input, s, t } => {
            let g = load_graph(m, &input.file)?;
            if let (Some(s), Some(t)) = (s, t) {
                m.param("s", s);
                m.param("t", t);
                let k = graph::local_connectivity(&g, *s, *t)?;
                return Ok(Outcome::ok(json!({ "s": s, "t": t, "local_connectivity": k })));
            }
            Ok(Outcome::ok(json!({ "kappa": graph::vertex_connectivity(&g)? })))
        }
        GraphCmd::Contract { input, edge } => {
            m.param("edge", edge);
            let g = load_graph(m, &input.file)?;
            let c = graph::contract_edge(&g, Edge::new(edge[0], edge[1]))?;
            Ok(Outcome::ok(json!({
                "n": c.graph.n(),
                "edges": graph::GraphJson::from(&c.graph).edges,
                "merged": c.merged,
                "map": c.map,
            })))
        }
        GraphCmd::Contractible { input, k } => {
            m.param("k", k);
            let g = load_graph(m, &input.file)?;
            let e = graph::find_contractible_edge(&g, *k)?;
            let found = e.is_some();
            Ok(Outcome::finding(json!({ "k": k, "edge": e.map(|e| [e.0, e.1]) }), found))
        }
        GraphCmd::Bridges { input, cycle } => {
            m.param("cycle", cycle);
            let g = load_graph(m, &input.file)?;
            let bridges = graph::bridges_of_cycle(&g, cycle)?;
            let mut relations = Vec::new();
            for i in 0..bridges.len() {
                for j in i + 1..bridges.len() {
                    let r = graph::classify_bridge_pair(&bridges[i], &bridges[j], cycle)?;
                    relations.push(json!({ "pair": [i, j], "relation": r }));
                }
            }
            Ok(Outcome::ok(json!({ "bridges": bridges, "relations": relations })))
        }
        GraphCmd::Ears { input, verify } => {
            let g = load_graph(m, &input.file)?;
            match verify {
                Some(path) => {
                    let ed: EarDecomposition = load_json(m, path)?;
                    let v = graph::verify_ear_decomposition(&g, &ed);
                    let valid = v.is_ok();
                    Ok(Outcome::finding(json!({ "valid": valid, "violation": v.err() }), valid))
                }
                None => Ok(Outcome::ok(graph::ear_decomposition(&g)?)),
            }
        }
        GraphCmd::Sdecomp { input, cut } => {
            m.param("cut", cut);
            let g = load_graph(m, &input.file)?;
            let s: BTreeSet<usize> = cut.iter().copied().collect();
            Ok(Outcome::ok(graph::marked_s_decomposition(&g, &s)?))
        }
        GraphCmd::Layers { input, root } => {
            m.param("root", root);
            let g = load_graph(m, &input.file)?;
            let layers = graph::bfs_layers(&g, *root)?;
            let sizes: Vec<usize> = layers.iter().map(BTreeSet::len).collect();
            Ok(Outcome::ok(json!({ "sizes": sizes, "layers": layers })))
        }
        GraphCmd::StackedPlanar { n, seed } => {
            use rand::SeedableRng;
            m.seed = Some(*seed);
            m.param("n", n);
            if *n < 4 {
                return Err(Error::InvalidArgument("a stacked triangulation needs n >= 4".into()));
            }
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(*seed);
            let t = graph::stacked_planar_triangulation(*n, &mut rng);
            let gj = graph::GraphJson::from(&t.graph);
            Ok(Outcome::ok(json!({ "n": gj.n, "edges": gj.edges, "faces": t.faces })))
        }
    }
}

fn minor_outcome(g: &Graph, model: Option<MinorModel>) -> Result<Outcome> {
    match model {
        Some(model) => {
            let check = minor::verify_minor_model(g, &model)?;
            Ok(Outcome::ok(json!({ "found": true, "model": model, "model_check": check })))
        }
        None => Ok(Outcome::finding(json!({ "found": false }), false)),
    }
}

fn run_minor(cmd: &MinorCmd, m: &mut RunManifest) -> Result<Outcome> {
    match cmd {
        MinorCmd::Clique { input, t } => {
            m.param("t", t);
            let g = load_graph(m, &input.file)?;
            minor_outcome(&g, minor::has_clique_minor(&g, *t)?)
        }
        MinorCmd::Bipartite { input, s, t } => {
            m.param("s", s);
            m.param("t", t);
            let g = load_graph(m, &input.file)?;
            minor_outcome(&g, minor::has_complete_bipartite_minor(&g, *s, *t)?)
        }
        MinorCmd::Pattern { input, pattern } => {
            let g = load_graph(m, &input.file)?;
            let h = load_graph(m, pattern)?;
            minor_outcome(&g, minor::has_minor(&g, &h)?)
        }
        MinorCmd::Verify { input, model } => {
            let g = load_graph(m, &input.file)?;
            let model: MinorModel = load_json(m, model)?;
            let check = minor::verify_minor_model(&g, &model)?;
            let valid = check.valid;
            Ok(Outcome::finding(check, valid))
        }
        MinorCmd::Sample { n, d, seed, budget } => {
            m.seed = Some(*seed);
            m.param("n", n);
            m.param("d", d);
            m.param("budget", budget);
            let graphs = minor::minor_free_sampler(*n, *d, *seed, *budget)?;
            let complete = graphs.len() == *budget;
            Ok(Outcome::new(
                json!({ "requested": budget, "returned": graphs.len(), "graphs": graphs }),
                if complete { EXIT_OK } else { EXIT_BUDGET },
            ))
        }
    }
}

fn run_complex(cmd: &ComplexCmd, m: &mut RunManifest) -> Result<Outcome> {
    match cmd {
        ComplexCmd::Raise { input, x, mode } => {
            m.param("x", x);
            let mode = match mode {
                ModeArg::Triangulated => RaiseMode::Triangulated,
                ModeArg::General2 => RaiseMode::General2,
                ModeArg::Certified => RaiseMode::Certified,
            };
            m.param("mode", mode);
            let g = load_graph(m, &input.file)?;
            let r = complex::raise_dimension(&g, *x, mode)?;
            let fv = r.complex.face_vector();
            let mut body = serde_json::to_value(&r)?;
            body["face_vector"] = serde_json::to_value(fv)?;
            Ok(Outcome::ok(body))
        }
        ComplexCmd::Witness { kind, d } => {
            m.param("d", d);
            let c = match kind {
                WitnessKind::Complete => {
                    m.param("kind", "complete");
                    complex::build_complete_witness(*d)?
                }
                WitnessKind::Bipartite => {
                    m.param("kind", "bipartite");
                    complex::build_bipartite_witness(*d)?
                }
            };
            Ok(Outcome::ok(json!({ "face_vector": c.face_vector(), "complex": c })))
        }
        ComplexCmd::Regions { input, regions, graph } => {
            m.param("graph", graph);
            let base = if *graph {
                CellComplex::from_graph(&load_graph(m, &input.file)?)
            } else {
                load_complex(m, &input.file)?
            };
            let data: Option<RegionData> = match regions {
                Some(p) => Some(load_json(m, p)?),
                None => None,
            };
            let c = complex::regions(&base, data.as_ref())?;
            Ok(Outcome::ok(json!({ "face_vector": c.face_vector(), "complex": c })))
        }
        ComplexCmd::Closed { input, d } => {
            m.param("d", d);
            let c = load_complex(m, &input.file)?;
            let r = c.is_closed(*d);
            let closed = r.closed;
            Ok(Outcome::finding(r, closed))
        }
        ComplexCmd::Faces { input } => {
            let c = load_complex(m, &input.file)?;
            Ok(Outcome::ok(json!({
                "dim": c.dim(),
                "face_vector": c.face_vector(),
                "euler_characteristic": c.euler_characteristic(),
                "simplicial": c.is_simplicial(),
            })))
        }
        ComplexCmd::Ears { input, stages } => {
            let c = load_complex(m, &input.file)?;
            let stages: Vec<Vec<CellId>> = load_json(m, stages)?;
            let r = complex::verify_hyper_ear_decomposition(&c, &stages)?;
            let valid = r.valid;
            Ok(Outcome::finding(r, valid))
        }
    }
}

fn run_certify(cmd: &CertifyCmd, m: &mut RunManifest) -> Result<Outcome> {
    match cmd {
        CertifyCmd::Betti { input } => {
            let c = load_complex(m, &input.file)?;
            Ok(Outcome::ok(json!({
                "gf2": topo::betti_numbers(&c, Coefficients::Gf2)?,
                "rational": topo::betti_numbers(&c, Coefficients::Rational)?,
                "euler_characteristic": c.euler_characteristic(),
            })))
        }
        CertifyCmd::Pi1 { input, budget } => {
            m.param("budget", budget);
            let c = load_complex(m, &input.file)?;
            let r = topo::pi1_trivial(&c, *budget)?;
            let code = match r.verdict {
                Tri::Yes => EXIT_OK,
                Tri::No => EXIT_NEGATIVE,
                Tri::Unknown => EXIT_BUDGET,
            };
            Ok(Outcome::new(r, code))
        }
        CertifyCmd::Sphere {
            input,
            dim,
            vertices,
            cells,
            budget,
        } => {
            m.param("dim", dim);
            m.param("budget", budget);
            let c = load_complex(m, &input.file)?;
            let set: BTreeSet<CellId> = match (vertices, cells) {
                (Some(vs), _) => {
                    m.param("vertices", vs);
                    c.induced_cells(&vs.iter().copied().collect(), *dim)
                }
                (None, Some(p)) => load_json::<Vec<CellId>>(m, p)?.into_iter().collect(),
                (None, None) => return Err(Error::InvalidArgument("give --vertices or --cells".into())),
            };
            let cert = topo::certify_sphere_with_budget(&c, &set, *dim, *budget)?;
            let code = verdict_code(cert.verdict);
            Ok(Outcome::new(cert, code))
        }
        CertifyCmd::Standalone { input, dim, budget } => {
            m.param("dim", dim);
            m.param("budget", budget);
            let c = load_complex(m, &input.file)?;
            let cert = topo::certify_standalone(&c, *dim, *budget)?;
            let code = verdict_code(cert.verdict);
            Ok(Outcome::new(cert, code))
        }
    }
}

fn run_color(cmd: &ColorCmd, m: &mut RunManifest) -> Result<Outcome> {
    match cmd {
        ColorCmd::Greedy { input } => {
            let g = load_graph(m, &input.file)?;
            let (_, degeneracy) = chroma::degeneracy_order(&g);
            let c = chroma::degeneracy_greedy(&g);
            Ok(Outcome::ok(json!({ "coloring": c, "degeneracy": degeneracy })))
        }
        ColorCmd::Exact { input } => {
            let g = load_graph(m, &input.file)?;
            let (k, c) = chroma::exact_chromatic(&g)?;
            Ok(Outcome::ok(json!({ "chromatic_number": k, "coloring": c })))
        }
        ColorCmd::AverageDegree { input } => {
            let g = load_graph(m, &input.file)?;
            let avg = chroma::average_degree(&g)?;
            Ok(Outcome::ok(json!({
                "vertices": g.n(),
                "edges": g.m(),
                "average_degree": geomgraph::exact::to_string(&avg),
            })))
        }
        ColorCmd::Bound { input, d } => {
            m.param("d", d);
            let g = load_graph(m, &input.file)?;
            let r = chroma::verify_chromatic_bound(&g, *d)?;
            let ok = r.bound_holds != Some(false);
            Ok(Outcome::finding(r, ok))
        }
        ColorCmd::Audit { input, d } => {
            m.param("d", d);
            let c = load_complex(m, &input.file)?;
            let r = chroma::skeleton_average_degree_audit(&c, *d)?;
            let ok = r.below_bound;
            Ok(Outcome::finding(r, ok))
        }
    }
}

fn run_discharge(cmd: &DischargeCmd, m: &mut RunManifest) -> Result<Outcome> {
    match cmd {
        DischargeCmd::Run {
            input,
            a,
            b,
            d,
            r1_scope,
        } => {
            let scope = match r1_scope {
                ScopeArg::Joint => R1Scope::Joint,
                ScopeArg::PerDim => R1Scope::PerDim,
            };
            m.param("a", a);
            m.param("b", b);
            m.param("d", d);
            m.param("r1_scope", scope);
            let c = load_complex(m, &input.file)?;
            let initial = discharge::initial_weights(&c, *a, *b, *d)?;
            let r1 = discharge::apply_r1(&initial, &c, scope)?;
            let r2 = discharge::apply_r2(&r1, &c)?;
            let total = initial.total();
            let conserved = r1.total() == total && r2.total() == total;
            let contradiction = discharge::detect_contradiction(&r1);
            Ok(Outcome::finding(
                json!({
                    "total": geomgraph::exact::to_string(&total),
                    "predicted_total": geomgraph::exact::to_string(&initial.predicted_total),
                    "euler_identity_holds": initial.euler_identity_holds,
                    "conserved": conserved,
                    "contradiction_after_r1": contradiction,
                    "stages": [initial, r1, r2],
                }),
                conserved,
            ))
        }
        DischargeCmd::Color { input, i, k } => {
            m.param("i", i);
            m.param("k", k);
            let c = load_complex(m, &input.file)?;
            match k {
                Some(k) => {
                    let col = discharge::i_dim_color(&c, *i, *k)?;
                    let found = col.is_some();
                    Ok(Outcome::finding(json!({ "k": k, "coloring": col }), found))
                }
                None => {
                    let (k, col) = discharge::chromatic_i(&c, *i)?;
                    Ok(Outcome::ok(json!({ "chromatic_i": k, "coloring": col })))
                }
            }
        }
        DischargeCmd::Dual { input } => {
            let c = load_complex(m, &input.file)?;
            let g = discharge::dual_graph(&c)?;
            Ok(Outcome::ok(json!({ "dual": g, "cycle_rank": g.cycle_rank() })))
        }
        DischargeCmd::Quanhe { input } => {
            let c = load_complex(m, &input.file)?;
            let q = discharge::check_quanhe(&c)?;
            let ok = q.holds;
            Ok(Outcome::finding(q, ok))
        }
        DischargeCmd::Reducibility { input, d } => {
            m.param("d", d);
            let c = load_complex(m, &input.file)?;
            Ok(Outcome::ok(discharge::verify_reducibility_jinyong1(&c, *d)))
        }
    }
}
