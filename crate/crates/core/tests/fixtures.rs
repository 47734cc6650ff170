//! Integrity of the shipped fixture corpus.

use rooted_cover::covers::minimal_vertex_covers;
use rooted_cover::explore::{load_fixture_corpus, random_chordal_clique_gluing};
use rooted_cover::rooted::{rooted_list_chordal, ChordalChooser};

#[test]
fn corpus_loads_and_is_chordal() {
    let corpus = load_fixture_corpus().unwrap();
    assert_eq!(corpus.len(), 17);
    for (name, file, graph) in &corpus {
        assert_eq!(file.name.as_deref(), Some(name.as_str()), "{name}");
        assert!(graph.is_chordal(), "{name} must be chordal");
        assert!(graph.ambient() <= 10, "{name} exceeds the corpus size bound");
    }
}

#[test]
fn seeded_fixtures_regenerate_exactly() {
    let corpus = load_fixture_corpus().unwrap();
    let mut seeded = 0;
    for (name, file, graph) in &corpus {
        if let Some(seed) = file.seed {
            let regenerated = random_chordal_clique_gluing(file.n, seed);
            assert_eq!(&regenerated, graph, "{name} does not match its seed");
            seeded += 1;
        }
    }
    assert_eq!(seeded, 2);
}

#[test]
fn canonical_rooted_lists_generate_the_cover_ideals() {
    for (name, _, graph) in load_fixture_corpus().unwrap() {
        let list = rooted_list_chordal(&graph, &ChordalChooser::Canonical).unwrap();
        let covers = minimal_vertex_covers(&graph).unwrap();
        assert_eq!(list.as_set(), covers, "{name}");
        assert_eq!(list.len(), covers.len(), "{name} has duplicate entries");
    }
}

#[test]
fn every_enumerated_list_generates_the_cover_ideal() {
    // Regardless of simplicial picks and block orders, a rooted list is a
    // permutation of the minimal covers.
    for (name, _, graph) in load_fixture_corpus().unwrap() {
        let covers = minimal_vertex_covers(&graph).unwrap();
        let enumeration = rooted_cover::explore::enumerate_rooted_lists(&graph, 8).unwrap();
        for el in &enumeration.lists {
            assert_eq!(el.list.as_set(), covers, "{name}: {:?}", el.script);
            assert_eq!(el.list.len(), covers.len(), "{name} duplicates");
        }
    }
}
