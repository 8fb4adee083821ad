mod common;

use cmramsey::constructions::{affine_plane_coloring, random_coloring};
use cmramsey::graph::Graph;
use cmramsey::ramsey::{find_mono_cm, search_avoider, SearchConfig, SearchOutcome};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn detector_matches_brute_force_on_all_small_colorings() {
    for vertices in 0..=5 {
        for colors in 1..=2 {
            for n in [2, 4, 6] {
                for (g, c) in all_colorings(vertices, colors) {
                    let expected = brute_mono_cm_colors(&g, &c, n);
                    match find_mono_cm(&g, &c, n).unwrap() {
                        Some(w) => {
                            assert!(w.validate(&g, &c, n));
                            assert_eq!(Some(&w.color), expected.first());
                        }
                        None => assert!(expected.is_empty(), "{g:?} {c:?} n={n}"),
                    }
                }
            }
        }
    }
}

#[test]
fn detector_matches_brute_force_on_random_colorings() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10_000 {
        let vertices = rng.gen_range(1..=12);
        let colors = rng.gen_range(1..=4);
        let n = [2, 4, 6, 8][rng.gen_range(0..4)];
        let p = rng.gen_range(0.1..1.0);
        let g = random_graph(&mut rng, vertices, p);
        let (_, full) = random_coloring(vertices, colors, rng.gen());
        let k = Graph::complete(vertices);
        let cols = g
            .edges()
            .iter()
            .map(|&(u, v)| full.color_of(&k, u, v).unwrap())
            .collect();
        let c = cmramsey::graph::EdgeColoring::new(&g, colors, cols).unwrap();
        let expected = brute_mono_cm_colors(&g, &c, n);
        let got = find_mono_cm(&g, &c, n).unwrap();
        assert_eq!(got.as_ref().map(|w| w.color), expected.first().copied());
        if let Some(w) = got {
            assert!(w.validate(&g, &c, n));
        }
    }
}

fn avoids(cfg: &SearchConfig) -> bool {
    match search_avoider(cfg).unwrap() {
        SearchOutcome::Avoider(c) => {
            let g = Graph::complete(cfg.vertices);
            assert!(brute_mono_cm_colors(&g, &c, cfg.n).is_empty());
            true
        }
        SearchOutcome::NoneExists => false,
    }
}

#[test]
fn pruned_search_agrees_with_unpruned() {
    for vertices in 1..=5 {
        for colors in 1..=3 {
            for n in [2, 4, 6] {
                let plain = avoids(&SearchConfig::unpruned(vertices, colors, n));
                let reduced = [
                    SearchConfig::new(vertices, colors, n),
                    SearchConfig {
                        vertex_symmetry: false,
                        ..SearchConfig::new(vertices, colors, n)
                    },
                    SearchConfig {
                        color_symmetry: false,
                        ..SearchConfig::new(vertices, colors, n)
                    },
                    SearchConfig {
                        capacity_pruning: false,
                        ..SearchConfig::new(vertices, colors, n)
                    },
                    SearchConfig {
                        threads: 3,
                        ..SearchConfig::new(vertices, colors, n)
                    },
                ];
                for cfg in reduced {
                    assert_eq!(avoids(&cfg), plain, "{cfg:?}");
                }
            }
        }
    }
}

#[test]
fn finds_affine_type_avoider_on_k9() {
    assert!(avoids(&SearchConfig {
        budget: 1_000_000,
        ..SearchConfig::new(9, 4, 4)
    }));
}

#[test]
fn seeded_search_is_deterministic() {
    let cfg = SearchConfig {
        seed: Some(5),
        ..SearchConfig::new(5, 3, 4)
    };
    let a = search_avoider(&cfg).unwrap();
    assert_eq!(a, search_avoider(&cfg).unwrap());
    assert!(matches!(a, SearchOutcome::Avoider(_)));
}

#[test]
fn affine_colorings_avoid() {
    for q in [2, 3, 5, 7] {
        let (g, c) = affine_plane_coloring(q).unwrap();
        let n = (q + 1).next_multiple_of(2);
        assert_eq!(find_mono_cm(&g, &c, n).unwrap(), None, "q={q}");
        // Components of q vertices carry matchings of size floor(q/2).
        assert!(find_mono_cm(&g, &c, 2 * (q / 2)).unwrap().is_some());
    }
}
