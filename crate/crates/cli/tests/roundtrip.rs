use std::collections::BTreeMap;

use proptest::prelude::*;
use unital_cli::input::{
    ActionDef, CoverDef, CrossedDef, FiniteGroupDef, GroupDef, IntersectionDef, Kind, NerveDef,
};
use unital_cli::{parse_input, print_input, InputFile};

fn group_def() -> impl Strategy<Value = GroupDef> {
    (prop::collection::vec(0i64..50, 0..3), 0usize..3).prop_map(|(inv, free)| GroupDef { inv, free })
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-9i64..9, 0..3), 0..3)
}

fn finite_group() -> impl Strategy<Value = FiniteGroupDef> {
    let leaf = prop_oneof![
        (1usize..9).prop_map(FiniteGroupDef::Cyclic),
        (1usize..5).prop_map(FiniteGroupDef::Dihedral),
        prop::sample::select(vec!["S3", "A4", "Q8", "trivial"]).prop_map(|s| FiniteGroupDef::Named(s.into())),
        prop::collection::vec(prop::collection::vec(0usize..4, 0..4), 0..4).prop_map(FiniteGroupDef::Table),
    ];
    leaf.prop_recursive(2, 6, 3, |inner| prop::collection::vec(inner, 0..3).prop_map(FiniteGroupDef::Product))
}

fn nerve() -> impl Strategy<Value = NerveDef> {
    let intersection = (prop::collection::vec(0usize..4, 2..4), 1usize..3, prop::option::of(prop::collection::vec(0usize..2, 1..3)))
        .prop_map(|(parts, components, parent)| IntersectionDef {
            parts,
            components,
            parents: parent.map(|p| BTreeMap::from([(0, p)])).unwrap_or_default(),
        });
    prop_oneof![
        prop::sample::select(vec!["point", "circle3"]).prop_map(|s| NerveDef::Preset(s.into())),
        (prop::collection::vec("[A-Z][0-9]", 1..4), prop::collection::vec(intersection, 0..3))
            .prop_map(|(parts, intersections)| NerveDef::Cover(CoverDef { parts, intersections })),
    ]
}

fn input_file() -> impl Strategy<Value = InputFile> {
    let names = prop::collection::btree_map(prop::sample::select(vec!["A", "B", "C"]).prop_map(String::from), group_def(), 0..3);
    let maps = prop::collection::btree_map(prop::sample::select(vec!["delta", "lambda"]).prop_map(String::from), matrix(), 0..2);
    let action = prop_oneof![
        Just(None),
        Just(Some(ActionDef::Named("conjugation".into()))),
        prop::collection::vec(prop::collection::vec(0usize..3, 0..3), 0..3).prop_map(|t| Some(ActionDef::Table(t))),
    ];
    let crossed = prop::option::of((finite_group(), finite_group(), prop::collection::vec(0usize..5, 0..5), action).prop_map(
        |(source, target, boundary, action)| CrossedDef { source, target, boundary, action },
    ));
    let kind = prop::sample::select(vec![Kind::Complex2, Kind::Complex3, Kind::CrossedModule]);
    (kind, names, maps, crossed, prop::option::of(nerve())).prop_map(|(kind, groups, maps, crossed, nerve)| InputFile {
        schema: 1,
        kind,
        groups,
        maps,
        crossed,
        nerve,
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(doc in input_file()) {
        let text = print_input(&doc);
        prop_assert_eq!(parse_input(&text).unwrap(), doc);
    }
}
