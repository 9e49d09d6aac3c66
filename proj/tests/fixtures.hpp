#pragma once

// Inline model documents used across the unit tests.

namespace fixtures {

// Two increments on a bounded counter; the canonical fully-compatible pair.
inline const char* kCounter = R"JSON({
  "schema": "eclat-model/1",
  "name": "counter-demo",
  "bounded_context": "demo",
  "aggregates": [
    {
      "name": "Counter",
      "writers": "any",
      "state_space": {
        "fields": [{"name": "value", "domain": {"kind": "int", "min": -10, "max": 10}}],
        "initial": {"value": 0}
      },
      "operations": [
        {
          "name": "addOne",
          "update_kind": "incremental",
          "effect": [{"fn": "add_delta", "field": "value", "delta": {"value": 1}}]
        },
        {
          "name": "addTwo",
          "update_kind": "incremental",
          "effect": [{"fn": "add_delta", "field": "value", "delta": {"value": 2}}]
        }
      ]
    }
  ]
})JSON";

// Two blind register writes to the same field; the canonical incompatible pair.
inline const char* kRegisters = R"JSON({
  "schema": "eclat-model/1",
  "name": "register-demo",
  "bounded_context": "demo",
  "aggregates": [
    {
      "name": "TaskStatus",
      "writers": "any",
      "state_space": {
        "fields": [{"name": "status", "domain": {"kind": "enum",
                                                 "symbols": ["Todo", "InProgress", "Blocked"]}}],
        "initial": {"status": "Todo"}
      },
      "operations": [
        {
          "name": "markBlocked",
          "update_kind": "true_blind",
          "effect": [{"fn": "set_register", "field": "status", "value": {"value": "Blocked"}}]
        },
        {
          "name": "markInProgress",
          "update_kind": "true_blind",
          "effect": [{"fn": "set_register", "field": "status", "value": {"value": "InProgress"}}]
        }
      ]
    }
  ]
})JSON";

// Lifecycle guard: configuration changes are only allowed before go-live.
inline const char* kLifecycle = R"JSON({
  "schema": "eclat-model/1",
  "name": "lifecycle-demo",
  "bounded_context": "demo",
  "aggregates": [
    {
      "name": "Barometer",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "phase", "domain": {"kind": "enum", "symbols": ["Draft", "Live"], "order": "chain"}},
          {"name": "scale_max", "domain": {"kind": "int", "min": 1, "max": 5}}
        ],
        "initial": {"phase": "Draft", "scale_max": 3}
      },
      "operations": [
        {
          "name": "goLive",
          "update_kind": "incremental",
          "effect": [{"fn": "lattice_join_field", "field": "phase", "value": {"value": "Live"}}]
        },
        {
          "name": "changeConfiguration",
          "update_kind": "true_blind",
          "params": [{"name": "scale_max", "domain": {"kind": "int", "min": 1, "max": 5}}],
          "precondition": {"eq": {"field": "phase", "value": {"value": "Draft"}}},
          "effect": [{"fn": "set_register", "field": "scale_max", "value": {"param": "scale_max"}}]
        }
      ]
    }
  ]
})JSON";

// Declared incremental but replaces state wholesale.
inline const char* kBadIncremental = R"JSON({
  "schema": "eclat-model/1",
  "name": "bad-incremental",
  "bounded_context": "demo",
  "aggregates": [
    {
      "name": "Doc",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "a", "domain": {"kind": "int", "min": 0, "max": 3}},
          {"name": "b", "domain": {"kind": "int", "min": 0, "max": 3}}
        ],
        "initial": {"a": 0, "b": 0}
      },
      "operations": [
        {
          "name": "overwrite",
          "update_kind": "incremental",
          "params": [{"name": "a", "domain": {"kind": "int", "min": 0, "max": 3}}],
          "effect": [{"fn": "replace_state", "assignments": {"a": {"param": "a"}, "b": {"value": 0}}}]
        }
      ]
    }
  ]
})JSON";

// Declared blind but computes count := count + 1.
inline const char* kBlindAdd = R"JSON({
  "schema": "eclat-model/1",
  "name": "blind-add",
  "bounded_context": "demo",
  "aggregates": [
    {
      "name": "Tally",
      "writers": "any",
      "state_space": {
        "fields": [{"name": "count", "domain": {"kind": "int", "min": 0, "max": 9}}],
        "initial": {"count": 0}
      },
      "operations": [
        {
          "name": "bump",
          "update_kind": "true_blind",
          "effect": [{"fn": "add_delta", "field": "count", "delta": {"value": 1}}]
        }
      ]
    }
  ]
})JSON";

// Initial state violates the declared invariant.
inline const char* kBadInvariant = R"JSON({
  "schema": "eclat-model/1",
  "name": "bad-invariant",
  "bounded_context": "demo",
  "aggregates": [
    {
      "name": "Quota",
      "writers": "any",
      "state_space": {
        "fields": [{"name": "used", "domain": {"kind": "int", "min": 0, "max": 10}}],
        "initial": {"used": 8}
      },
      "invariants": [
        {"name": "under_half", "predicate": {"le": {"field": "used", "value": {"value": 5}}}}
      ],
      "operations": [
        {
          "name": "consume",
          "update_kind": "incremental",
          "effect": [{"fn": "add_delta", "field": "used", "delta": {"value": 1}}]
        }
      ]
    }
  ]
})JSON";

// State space ~2e6: exhaustive checking would exceed the cap, so pairwise
// checks fall back to sampling.
inline const char* kBigSpace = R"JSON({
  "schema": "eclat-model/1",
  "name": "big-space",
  "bounded_context": "demo",
  "aggregates": [
    {
      "name": "Wide",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "x", "domain": {"kind": "int", "min": 0, "max": 999}},
          {"name": "y", "domain": {"kind": "int", "min": 0, "max": 1999}}
        ],
        "initial": {"x": 0, "y": 0}
      },
      "operations": [
        {
          "name": "nudgeX",
          "update_kind": "incremental",
          "effect": [{"fn": "add_delta", "field": "x", "delta": {"value": 1}}]
        },
        {
          "name": "nudgeY",
          "update_kind": "incremental",
          "effect": [{"fn": "add_delta", "field": "y", "delta": {"value": 1}}]
        }
      ]
    }
  ]
})JSON";

// Two maximal elements without an upper bound: a poset but not a semilattice.
inline const char* kNonLattice = R"JSON({
  "schema": "eclat-model/1",
  "name": "non-lattice",
  "bounded_context": "demo",
  "aggregates": [
    {
      "name": "Forked",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "stage", "domain": {"kind": "enum", "symbols": ["start", "left", "right"],
                                       "order": {"pairs": [["start", "left"], ["start", "right"]]}}}
        ],
        "initial": {"stage": "start"}
      },
      "operations": [
        {
          "name": "advance",
          "update_kind": "incremental",
          "effect": [{"fn": "lattice_join_field", "field": "stage", "value": {"value": "left"}}]
        }
      ]
    }
  ]
})JSON";

// Insert and remove on the same set, both declared incremental: they do not
// commute, which is exactly the NonCommutingIncrementPair anti-pattern.
inline const char* kClashingIncrements = R"JSON({
  "schema": "eclat-model/1",
  "name": "clashing-increments",
  "bounded_context": "demo",
  "aggregates": [
    {
      "name": "Labels",
      "writers": "any",
      "state_space": {
        "fields": [{"name": "labels", "domain": {"kind": "set", "symbols": ["red", "green"]}}],
        "initial": {"labels": []}
      },
      "operations": [
        {
          "name": "label",
          "update_kind": "incremental",
          "params": [{"name": "l", "domain": {"kind": "enum", "symbols": ["red", "green"]}}],
          "effect": [{"fn": "insert_keyed", "field": "labels", "element": {"param": "l"}}]
        },
        {
          "name": "unlabel",
          "update_kind": "incremental",
          "params": [{"name": "l", "domain": {"kind": "enum", "symbols": ["red", "green"]}}],
          "effect": [{"fn": "remove_element", "field": "labels", "element": {"param": "l"}}]
        }
      ]
    }
  ]
})JSON";

} // namespace fixtures
