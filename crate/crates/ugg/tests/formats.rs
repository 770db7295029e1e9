//! Text formats and SVG output.

use ugg::format::{
    parse_embedding, parse_host, parse_input, parse_inputs, write_host, write_input, write_inputs, Host, HostKind,
    Input,
};
use ugg::svg::{render_svg, Layout, Overlay};
use ugg_core::embedder::embed_forest;
use ugg_core::enumerate::{enumerate_chorded_cycles, enumerate_forests};
use ugg_core::HostRef;

#[test]
fn every_host_kind_round_trips() {
    for (kind, n) in [(HostKind::Universal, 31), (HostKind::Caterpillar, 20), (HostKind::TwoChord, 17)] {
        let host = Host::build(kind, n).unwrap();
        for explicit in [false, true] {
            let back = parse_host(&write_host(&host, explicit).unwrap()).unwrap();
            assert_eq!(back.kind(), kind);
            assert_eq!(back.edges(), host.edges());
        }
    }
}

#[test]
fn convex_kind_needs_its_edges() {
    let text = "ugg-graph v1\nkind convex\nn 4\nedges\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n";
    let host = parse_host(text).unwrap();
    assert_eq!(host.edges(), [(0, 1), (0, 3), (1, 2), (2, 3)]);
    assert_eq!(parse_host(&write_host(&host, false).unwrap()).unwrap().edges(), host.edges());
    let err = parse_host("ugg-graph v1\nkind convex\nn 4\n").unwrap_err();
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn malformed_hosts() {
    for text in [
        "",
        "ugg-graph v2\nkind universal\nn 3\n",
        "ugg-graph v1\nkind hypercube\nn 3\n",
        "ugg-graph v1\nkind universal\n",
        "ugg-graph v1\nkind universal\nn -3\n",
        "ugg-graph v1\nkind universal\nn 3\nextra 1\n",
    ] {
        assert_eq!(parse_host(text).unwrap_err().exit_code(), 2, "{text:?}");
    }
}

#[test]
fn enumerated_streams_round_trip() {
    let forests: Vec<Input> = enumerate_forests(6).unwrap().into_iter().map(Input::Forest).collect();
    assert_eq!(parse_inputs(&write_inputs(&forests)).unwrap(), forests);
    let chorded: Vec<Input> = enumerate_chorded_cycles(10, 2).unwrap().into_iter().map(Input::Chorded).collect();
    assert_eq!(parse_inputs(&write_inputs(&chorded)).unwrap(), chorded);
    for input in &chorded {
        assert_eq!(&parse_input(&write_input(input)).unwrap(), input);
    }
}

#[test]
fn chorded_inputs_are_validated() {
    // interleaving chords
    assert!(parse_input("n 8\nh 2\nc 0 4\nc 2 6\n").is_err());
    // shared endpoint
    assert!(parse_input("n 8\nh 2\nc 0 4\nc 4 6\n").is_err());
}

#[test]
fn embedding_parse_and_validation() {
    let host = Host::build(HostKind::Universal, 7).unwrap();
    // edges (0,1), (2,3) sent onto the crossing pair (1,3), (2,5)
    let input = parse_input("n 4\ne 0 1\ne 2 3\n").unwrap();
    let phi = parse_embedding("m 0 1\nm 1 3\nm 2 2\nm 3 5\n", HostRef::Universal { n: 7 }).unwrap();
    let r = host.validate(input.n(), &input.edges(), &phi);
    assert_eq!(r.failures.len(), 1);
    assert_eq!(format!("{:?}", r.failures[0].kind()), "Crossing");
}

fn count(svg: &str, class: &str) -> usize {
    svg.matches(&format!(r#"class="{class}""#)).count()
}

#[test]
fn svg_counts_follow_the_model() {
    for n in [1, 2, 7, 15, 31, 100] {
        let host = Host::build(HostKind::Universal, n).unwrap();
        let svg = render_svg(&host, Layout::Schematic, None).unwrap();
        assert!(svg.starts_with("<svg ") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(count(&svg, "vertex"), n);
        assert_eq!(count(&svg, "edge"), host.edges().len());
        if n <= 31 {
            let svg = render_svg(&host, Layout::Exact, None).unwrap();
            assert_eq!(count(&svg, "edge"), host.edges().len());
            assert_eq!(svg.matches(" Q").count(), 0);
        }
    }
}

#[test]
fn svg_overlay() {
    let host = Host::build(HostKind::Universal, 9).unwrap();
    let Host::Universal(g) = &host else { unreachable!() };
    let f = enumerate_forests(9).unwrap().pop().unwrap();
    let phi = embed_forest(g, &f).unwrap();
    let svg = render_svg(&host, Layout::Exact, Some(Overlay { phi: &phi, edges: Some(f.edges()) })).unwrap();
    assert_eq!(count(&svg, "image-vertex"), 9);
    assert_eq!(count(&svg, "image-edge"), f.edges().len());
    assert_eq!(count(&svg, "edge"), host.edges().len());
}
