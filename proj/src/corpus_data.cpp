// Bundled domain-model reconstructions and demo scenarios. The studied
// systems' actual models are unpublished; these are authored to match the
// published operation/aggregate counts exactly, with domain semantics drawn
// from the systems' descriptions (mood barometer configuration and voting
// lifecycle, task board status/comments, backlog grooming and planning
// poker). Each entry carries a provenance note saying so.

#include "corpus_data.hpp"

namespace eclat::corpus_data {

const char* const kMoodBarometerBaseline = R"JSON({
  "schema": "eclat-model/1",
  "name": "moodbarometer-baseline",
  "bounded_context": "team-mood-barometer",
  "aggregates": [
    {
      "name": "MoodBarometerDocument",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "phase", "domain": {"kind": "enum", "symbols": ["Draft", "Live", "Closed"]}},
          {"name": "question", "domain": {"kind": "enum", "symbols": ["q_sprint", "q_week", "q_release"]}}
        ],
        "initial": {"phase": "Draft", "question": "q_sprint"}
      },
      "operations": [
        {
          "name": "saveMoodBarometer",
          "update_kind": "state_based",
          "params": [
            {"name": "phase", "domain": {"kind": "enum", "symbols": ["Draft", "Live", "Closed"]}},
            {"name": "question", "domain": {"kind": "enum", "symbols": ["q_sprint", "q_week", "q_release"]}}
          ],
          "effect": [
            {"fn": "replace_state", "assignments": {
              "phase": {"param": "phase"},
              "question": {"param": "question"}
            }}
          ],
          "intent": {"all": [
            {"eq": {"field": "phase", "value": {"param": "phase"}}},
            {"eq": {"field": "question", "value": {"param": "question"}}}
          ]}
        }
      ]
    },
    {
      "name": "BarometerConfigurationDocument",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "scale_max", "domain": {"kind": "int", "min": 1, "max": 5}},
          {"name": "anonymous", "domain": {"kind": "enum", "symbols": ["yes", "no"]}}
        ],
        "initial": {"scale_max": 3, "anonymous": "yes"}
      },
      "operations": [
        {
          "name": "saveConfiguration",
          "update_kind": "state_based",
          "params": [
            {"name": "scale_max", "domain": {"kind": "int", "min": 1, "max": 5}},
            {"name": "anonymous", "domain": {"kind": "enum", "symbols": ["yes", "no"]}}
          ],
          "effect": [
            {"fn": "replace_state", "assignments": {
              "scale_max": {"param": "scale_max"},
              "anonymous": {"param": "anonymous"}
            }}
          ],
          "intent": {"all": [
            {"eq": {"field": "scale_max", "value": {"param": "scale_max"}}},
            {"eq": {"field": "anonymous", "value": {"param": "anonymous"}}}
          ]}
        }
      ]
    },
    {
      "name": "VoteRecords",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "votes", "domain": {"kind": "map", "keys": ["m1", "m2", "m3"],
                                       "values": {"kind": "int", "min": 1, "max": 5}}}
        ],
        "initial": {"votes": {}}
      }
    },
    {
      "name": "TeamRoster",
      "writers": [],
      "state_space": {
        "fields": [
          {"name": "members", "domain": {"kind": "set", "symbols": ["m1", "m2", "m3"]}}
        ],
        "initial": {"members": ["m1", "m2"]}
      }
    }
  ]
})JSON";

const char* const kMoodBarometerRedesignA = R"JSON({
  "schema": "eclat-model/1",
  "name": "moodbarometer-redesign-a",
  "bounded_context": "team-mood-barometer",
  "aggregates": [
    {
      "name": "BarometerConfiguration",
      "writers": [],
      "declared_class": "Immutable",
      "state_space": {
        "fields": [
          {"name": "scale_max", "domain": {"kind": "int", "min": 1, "max": 5}},
          {"name": "anonymous", "domain": {"kind": "enum", "symbols": ["yes", "no"]}},
          {"name": "question", "domain": {"kind": "enum", "symbols": ["q_sprint", "q_week", "q_release"]}}
        ],
        "initial": {"scale_max": 5, "anonymous": "yes", "question": "q_sprint"}
      }
    },
    {
      "name": "VotingLifecycle",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "phase", "domain": {"kind": "enum", "symbols": ["Draft", "Live", "Closed"],
                                       "order": "chain"}}
        ],
        "initial": {"phase": "Draft"}
      },
      "operations": [
        {
          "name": "openForVotes",
          "update_kind": "incremental",
          "effect": [{"fn": "lattice_join_field", "field": "phase", "value": {"value": "Live"}}],
          "intent": {"ge": {"field": "phase", "value": {"value": "Live"}}}
        },
        {
          "name": "closeVoting",
          "update_kind": "incremental",
          "effect": [{"fn": "lattice_join_field", "field": "phase", "value": {"value": "Closed"}}],
          "intent": {"ge": {"field": "phase", "value": {"value": "Closed"}}}
        }
      ]
    },
    {
      "name": "MoodVotes",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "votes", "domain": {"kind": "map", "keys": ["m1", "m2", "m3", "m4", "m5"],
                                       "values": {"kind": "enum", "symbols": ["low", "neutral", "high"]}}}
        ],
        "initial": {"votes": {}}
      },
      "operations": [
        {
          "name": "placeVote",
          "update_kind": "incremental",
          "params": [
            {"name": "member", "domain": {"kind": "enum", "symbols": ["m1", "m2", "m3", "m4", "m5"]}},
            {"name": "mood", "domain": {"kind": "enum", "symbols": ["low", "neutral", "high"]}}
          ],
          "effect": [{"fn": "insert_keyed", "field": "votes",
                      "key": {"param": "member"}, "value": {"param": "mood"}}],
          "intent": {"entry_eq": {"field": "votes", "key": {"param": "member"},
                                  "value": {"param": "mood"}}}
        }
      ]
    },
    {
      "name": "VotingSchedule",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "closes_on_day", "domain": {"kind": "int", "min": 0, "max": 99}}
        ],
        "initial": {"closes_on_day": 10}
      },
      "operations": [
        {
          "name": "extendVotingPeriod",
          "update_kind": "incremental",
          "params": [{"name": "extra_days", "domain": {"kind": "int", "min": 1, "max": 2}}],
          "effect": [{"fn": "add_delta", "field": "closes_on_day", "delta": {"param": "extra_days"}}]
        }
      ]
    },
    {
      "name": "MoodSummary",
      "writers": [],
      "declared_class": "Derived",
      "state_space": {
        "fields": [
          {"name": "votes_cast", "domain": {"kind": "int", "min": 0, "max": 5}}
        ],
        "initial": {"votes_cast": 0}
      },
      "projection_of": {"aggregate": "MoodVotes", "projection": "map_size",
                        "source_field": "votes", "target_field": "votes_cast"}
    }
  ]
})JSON";

const char* const kMoodBarometerRedesignB = R"JSON({
  "schema": "eclat-model/1",
  "name": "moodbarometer-redesign-b",
  "bounded_context": "team-mood-barometer",
  "aggregates": [
    {
      "name": "BarometerConfiguration",
      "writers": [],
      "declared_class": "Immutable",
      "state_space": {
        "fields": [
          {"name": "scale_max", "domain": {"kind": "int", "min": 1, "max": 5}},
          {"name": "anonymous", "domain": {"kind": "enum", "symbols": ["yes", "no"]}}
        ],
        "initial": {"scale_max": 5, "anonymous": "yes"}
      }
    },
    {
      "name": "TeamRoster",
      "writers": [],
      "state_space": {
        "fields": [
          {"name": "members", "domain": {"kind": "set", "symbols": ["m1", "m2", "m3", "m4"]}}
        ],
        "initial": {"members": ["m1", "m2", "m3"]}
      }
    },
    {
      "name": "MoodVotes",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "votes", "domain": {"kind": "map", "keys": ["m1", "m2", "m3", "m4"],
                                       "values": {"kind": "enum", "symbols": ["low", "neutral", "high"]}}},
          {"name": "retracted", "domain": {"kind": "set", "symbols": ["m1", "m2", "m3", "m4"]}}
        ],
        "initial": {"votes": {}, "retracted": []}
      },
      "operations": [
        {
          "name": "placeVote",
          "update_kind": "incremental",
          "params": [
            {"name": "member", "domain": {"kind": "enum", "symbols": ["m1", "m2", "m3", "m4"]}},
            {"name": "mood", "domain": {"kind": "enum", "symbols": ["low", "neutral", "high"]}}
          ],
          "effect": [{"fn": "insert_keyed", "field": "votes",
                      "key": {"param": "member"}, "value": {"param": "mood"}}],
          "intent": {"entry_eq": {"field": "votes", "key": {"param": "member"},
                                  "value": {"param": "mood"}}}
        },
        {
          "name": "retractVote",
          "update_kind": "incremental",
          "params": [
            {"name": "member", "domain": {"kind": "enum", "symbols": ["m1", "m2", "m3", "m4"]}}
          ],
          "effect": [{"fn": "tombstone_delete", "field": "retracted", "element": {"param": "member"}}],
          "intent": {"contains": {"field": "retracted", "element": {"param": "member"}}}
        }
      ]
    },
    {
      "name": "BarometerQuestion",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "question", "domain": {"kind": "enum",
                                          "symbols": ["q_sprint", "q_week", "q_release", "q_custom"]}}
        ],
        "initial": {"question": "q_sprint"}
      },
      "operations": [
        {
          "name": "editQuestion",
          "update_kind": "true_blind",
          "params": [
            {"name": "question", "domain": {"kind": "enum",
                                            "symbols": ["q_sprint", "q_week", "q_release", "q_custom"]}}
          ],
          "effect": [{"fn": "set_register", "field": "question", "value": {"param": "question"}}],
          "intent": {"eq": {"field": "question", "value": {"param": "question"}}},
          "superseded_by": ["editQuestion"]
        }
      ]
    },
    {
      "name": "MoodSummary",
      "writers": [],
      "declared_class": "Derived",
      "state_space": {
        "fields": [
          {"name": "votes_counted", "domain": {"kind": "int", "min": 0, "max": 4}}
        ],
        "initial": {"votes_counted": 0}
      },
      "projection_of": {"aggregate": "MoodVotes", "projection": "keyed_live_count",
                        "keyed_field": "votes", "removed_field": "retracted",
                        "target_field": "votes_counted"}
    }
  ]
})JSON";

const char* const kTaskboardNaive = R"JSON({
  "schema": "eclat-model/1",
  "name": "taskboard-naive",
  "bounded_context": "taskboard",
  "aggregates": [
    {
      "name": "Task",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "status", "domain": {"kind": "enum", "symbols": ["Todo", "InProgress", "Blocked"]}},
          {"name": "comments", "domain": {"kind": "set", "symbols": ["c_scope", "c_design", "c_blocker"]}}
        ],
        "initial": {"status": "Todo", "comments": []}
      },
      "operations": [
        {
          "name": "updateTask",
          "update_kind": "state_based",
          "params": [
            {"name": "status", "domain": {"kind": "enum", "symbols": ["Todo", "InProgress", "Blocked"]}},
            {"name": "comment", "domain": {"kind": "enum", "symbols": ["none", "c_scope", "c_design", "c_blocker"]}}
          ],
          "effect": [
            {"fn": "replace_state", "assignments": {
              "status": {"param": "status"},
              "comments": {"singleton": {"param": "comment"}}
            }}
          ],
          "intent": {"all": [
            {"eq": {"field": "status", "value": {"param": "status"}}},
            {"any": [
              {"param_is": {"param": "comment", "value": "none"}},
              {"contains": {"field": "comments", "element": {"param": "comment"}}}
            ]}
          ]}
        },
        {
          "name": "addComment",
          "update_kind": "state_based",
          "params": [
            {"name": "comment", "domain": {"kind": "enum", "symbols": ["c_scope", "c_design", "c_blocker"]}}
          ],
          "effect": [{"fn": "insert_keyed", "field": "comments", "element": {"param": "comment"}}],
          "intent": {"contains": {"field": "comments", "element": {"param": "comment"}}}
        },
        {
          "name": "deleteComment",
          "update_kind": "state_based",
          "params": [
            {"name": "comment", "domain": {"kind": "enum", "symbols": ["c_scope", "c_design", "c_blocker"]}}
          ],
          "effect": [{"fn": "remove_element", "field": "comments", "element": {"param": "comment"}}],
          "intent": {"not": {"contains": {"field": "comments", "element": {"param": "comment"}}}}
        }
      ]
    }
  ]
})JSON";

const char* const kTaskboardSafe = R"JSON({
  "schema": "eclat-model/1",
  "name": "taskboard-safe",
  "bounded_context": "taskboard",
  "aggregates": [
    {
      "name": "Task",
      "writers": "any",
      "declared_class": "FullyCompatible",
      "state_space": {
        "fields": [
          {"name": "status", "domain": {"kind": "enum", "symbols": ["Todo", "InProgress", "Blocked"],
                                        "order": "chain"}},
          {"name": "comments", "domain": {"kind": "set", "symbols": ["c_scope", "c_design", "c_blocker"]}},
          {"name": "comments_removed", "domain": {"kind": "set", "symbols": ["c_scope", "c_design", "c_blocker"]}}
        ],
        "initial": {"status": "Todo", "comments": [], "comments_removed": []}
      },
      "operations": [
        {
          "name": "startWork",
          "update_kind": "incremental",
          "effect": [{"fn": "lattice_join_field", "field": "status", "value": {"value": "InProgress"}}],
          "intent": {"ge": {"field": "status", "value": {"value": "InProgress"}}}
        },
        {
          "name": "blockTask",
          "update_kind": "incremental",
          "effect": [{"fn": "lattice_join_field", "field": "status", "value": {"value": "Blocked"}}],
          "intent": {"ge": {"field": "status", "value": {"value": "Blocked"}}}
        },
        {
          "name": "addComment",
          "update_kind": "incremental",
          "params": [
            {"name": "comment", "domain": {"kind": "enum", "symbols": ["c_scope", "c_design", "c_blocker"]}}
          ],
          "effect": [{"fn": "insert_keyed", "field": "comments", "element": {"param": "comment"}}],
          "intent": {"contains": {"field": "comments", "element": {"param": "comment"}}}
        },
        {
          "name": "deleteComment",
          "update_kind": "incremental",
          "params": [
            {"name": "comment", "domain": {"kind": "enum", "symbols": ["c_scope", "c_design", "c_blocker"]}}
          ],
          "effect": [{"fn": "tombstone_delete", "field": "comments_removed", "element": {"param": "comment"}}],
          "intent": {"contains": {"field": "comments_removed", "element": {"param": "comment"}}}
        }
      ]
    },
    {
      "name": "TaskDigest",
      "writers": [],
      "state_space": {
        "fields": [
          {"name": "open_comments", "domain": {"kind": "int", "min": 0, "max": 3}}
        ],
        "initial": {"open_comments": 0}
      },
      "projection_of": {"aggregate": "Task", "projection": "live_count",
                        "added_field": "comments", "removed_field": "comments_removed",
                        "target_field": "open_comments"}
    }
  ]
})JSON";

const char* const kBacklog = R"JSON({
  "schema": "eclat-model/1",
  "name": "backlog",
  "bounded_context": "backlog-management",
  "aggregates": [
    {
      "name": "EstimationScale",
      "writers": [],
      "declared_class": "Immutable",
      "state_space": {
        "fields": [
          {"name": "cards", "domain": {"kind": "set", "symbols": ["xs", "s", "m", "l", "xl"]}}
        ],
        "initial": {"cards": ["xs", "s", "m", "l", "xl"]}
      }
    },
    {
      "name": "BacklogDigest",
      "writers": [],
      "declared_class": "Derived",
      "state_space": {
        "fields": [
          {"name": "active_stories", "domain": {"kind": "int", "min": 0, "max": 3}}
        ],
        "initial": {"active_stories": 0}
      },
      "projection_of": {"aggregate": "ProductBacklog", "projection": "live_count",
                        "added_field": "stories", "removed_field": "archived",
                        "target_field": "active_stories"}
    },
    {
      "name": "SprintCalendar",
      "writers": ["scrum_master"],
      "state_space": {
        "fields": [
          {"name": "ceremonies", "domain": {"kind": "map", "keys": ["mon", "wed", "fri"],
                                            "values": {"kind": "enum", "symbols": ["grooming", "poker", "review"]}}}
        ],
        "initial": {"ceremonies": {}}
      },
      "operations": [
        {
          "name": "scheduleCeremony",
          "update_kind": "incremental",
          "params": [
            {"name": "day", "domain": {"kind": "enum", "symbols": ["mon", "wed", "fri"]}},
            {"name": "ceremony", "domain": {"kind": "enum", "symbols": ["grooming", "poker", "review"]}}
          ],
          "effect": [{"fn": "insert_keyed", "field": "ceremonies",
                      "key": {"param": "day"}, "value": {"param": "ceremony"}}],
          "intent": {"entry_eq": {"field": "ceremonies", "key": {"param": "day"},
                                  "value": {"param": "ceremony"}}}
        }
      ]
    },
    {
      "name": "UserStory",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "description", "domain": {"kind": "enum", "symbols": ["draft_a", "draft_b", "draft_c"]}},
          {"name": "status", "domain": {"kind": "enum", "symbols": ["Draft", "Ready", "InSprint", "Done"],
                                        "order": "chain"}},
          {"name": "criteria", "domain": {"kind": "set", "symbols": ["given_ctx", "when_act", "then_res"]}},
          {"name": "criteria_removed", "domain": {"kind": "set", "symbols": ["given_ctx", "when_act", "then_res"]}},
          {"name": "tags", "domain": {"kind": "set", "symbols": ["frontend", "backend"]}},
          {"name": "tags_removed", "domain": {"kind": "set", "symbols": ["frontend", "backend"]}},
          {"name": "revision", "domain": {"kind": "int", "min": 0, "max": 5}}
        ],
        "initial": {"description": "draft_a", "status": "Draft", "criteria": [],
                    "criteria_removed": [], "tags": [], "tags_removed": [], "revision": 0}
      },
      "operations": [
        {
          "name": "editStoryDescription",
          "update_kind": "state_based",
          "params": [
            {"name": "text", "domain": {"kind": "enum", "symbols": ["draft_a", "draft_b", "draft_c"]}}
          ],
          "effect": [{"fn": "set_register", "field": "description", "value": {"param": "text"}}],
          "intent": {"eq": {"field": "description", "value": {"param": "text"}}},
          "superseded_by": ["editStoryDescription"]
        },
        {
          "name": "advanceStatus",
          "update_kind": "incremental",
          "params": [
            {"name": "to", "domain": {"kind": "enum", "symbols": ["Ready", "InSprint", "Done"]}}
          ],
          "effect": [{"fn": "lattice_join_field", "field": "status", "value": {"param": "to"}}],
          "intent": {"ge": {"field": "status", "value": {"param": "to"}}}
        },
        {
          "name": "addAcceptanceCriterion",
          "update_kind": "incremental",
          "params": [
            {"name": "criterion", "domain": {"kind": "enum", "symbols": ["given_ctx", "when_act", "then_res"]}}
          ],
          "effect": [{"fn": "insert_keyed", "field": "criteria", "element": {"param": "criterion"}}],
          "intent": {"contains": {"field": "criteria", "element": {"param": "criterion"}}}
        },
        {
          "name": "retireAcceptanceCriterion",
          "update_kind": "incremental",
          "params": [
            {"name": "criterion", "domain": {"kind": "enum", "symbols": ["given_ctx", "when_act", "then_res"]}}
          ],
          "effect": [{"fn": "tombstone_delete", "field": "criteria_removed", "element": {"param": "criterion"}}],
          "intent": {"contains": {"field": "criteria_removed", "element": {"param": "criterion"}}}
        },
        {
          "name": "tagStory",
          "update_kind": "incremental",
          "params": [
            {"name": "tag", "domain": {"kind": "enum", "symbols": ["frontend", "backend"]}}
          ],
          "effect": [{"fn": "insert_keyed", "field": "tags", "element": {"param": "tag"}}],
          "intent": {"contains": {"field": "tags", "element": {"param": "tag"}}}
        },
        {
          "name": "untagStory",
          "update_kind": "incremental",
          "params": [
            {"name": "tag", "domain": {"kind": "enum", "symbols": ["frontend", "backend"]}}
          ],
          "effect": [{"fn": "tombstone_delete", "field": "tags_removed", "element": {"param": "tag"}}],
          "intent": {"contains": {"field": "tags_removed", "element": {"param": "tag"}}}
        },
        {
          "name": "bumpRevision",
          "update_kind": "incremental",
          "effect": [{"fn": "add_delta", "field": "revision", "delta": {"value": 1}}]
        }
      ]
    },
    {
      "name": "ProductBacklog",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "stories", "domain": {"kind": "set", "symbols": ["story_auth", "story_sync", "story_report"]}},
          {"name": "archived", "domain": {"kind": "set", "symbols": ["story_auth", "story_sync", "story_report"]}},
          {"name": "groom_queue", "domain": {"kind": "set", "symbols": ["story_auth", "story_sync", "story_report"]}},
          {"name": "groom_done", "domain": {"kind": "set", "symbols": ["story_auth", "story_sync", "story_report"]}},
          {"name": "capacity", "domain": {"kind": "int", "min": 0, "max": 20}}
        ],
        "initial": {"stories": [], "archived": [], "groom_queue": [], "groom_done": [], "capacity": 8}
      },
      "operations": [
        {
          "name": "addStory",
          "update_kind": "incremental",
          "params": [
            {"name": "story", "domain": {"kind": "enum", "symbols": ["story_auth", "story_sync", "story_report"]}}
          ],
          "effect": [{"fn": "insert_keyed", "field": "stories", "element": {"param": "story"}}],
          "intent": {"contains": {"field": "stories", "element": {"param": "story"}}}
        },
        {
          "name": "archiveStory",
          "update_kind": "incremental",
          "params": [
            {"name": "story", "domain": {"kind": "enum", "symbols": ["story_auth", "story_sync", "story_report"]}}
          ],
          "effect": [{"fn": "tombstone_delete", "field": "archived", "element": {"param": "story"}}],
          "intent": {"contains": {"field": "archived", "element": {"param": "story"}}}
        },
        {
          "name": "queueForGrooming",
          "update_kind": "incremental",
          "params": [
            {"name": "story", "domain": {"kind": "enum", "symbols": ["story_auth", "story_sync", "story_report"]}}
          ],
          "effect": [{"fn": "insert_keyed", "field": "groom_queue", "element": {"param": "story"}}],
          "intent": {"contains": {"field": "groom_queue", "element": {"param": "story"}}}
        },
        {
          "name": "markGroomed",
          "update_kind": "incremental",
          "params": [
            {"name": "story", "domain": {"kind": "enum", "symbols": ["story_auth", "story_sync", "story_report"]}}
          ],
          "effect": [{"fn": "tombstone_delete", "field": "groom_done", "element": {"param": "story"}}],
          "intent": {"contains": {"field": "groom_done", "element": {"param": "story"}}}
        },
        {
          "name": "extendCapacity",
          "update_kind": "incremental",
          "params": [{"name": "points", "domain": {"kind": "int", "min": 1, "max": 2}}],
          "effect": [{"fn": "add_delta", "field": "capacity", "delta": {"param": "points"}}]
        }
      ]
    },
    {
      "name": "PlanningPoker",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "estimates", "domain": {"kind": "map", "keys": ["m1", "m2", "m3"],
                                           "values": {"kind": "enum", "symbols": ["card_s", "card_m", "card_l"]}}},
          {"name": "retracted", "domain": {"kind": "set", "symbols": ["m1", "m2", "m3"]}},
          {"name": "phase", "domain": {"kind": "enum", "symbols": ["Voting", "Revealed", "Closed"],
                                       "order": "chain"}},
          {"name": "dissent", "domain": {"kind": "set", "symbols": ["m1", "m2", "m3"]}}
        ],
        "initial": {"estimates": {}, "retracted": [], "phase": "Voting", "dissent": []}
      },
      "operations": [
        {
          "name": "castEstimate",
          "update_kind": "incremental",
          "params": [
            {"name": "member", "domain": {"kind": "enum", "symbols": ["m1", "m2", "m3"]}},
            {"name": "card", "domain": {"kind": "enum", "symbols": ["card_s", "card_m", "card_l"]}}
          ],
          "effect": [{"fn": "insert_keyed", "field": "estimates",
                      "key": {"param": "member"}, "value": {"param": "card"}}],
          "intent": {"entry_eq": {"field": "estimates", "key": {"param": "member"},
                                  "value": {"param": "card"}}}
        },
        {
          "name": "retractEstimate",
          "update_kind": "incremental",
          "params": [
            {"name": "member", "domain": {"kind": "enum", "symbols": ["m1", "m2", "m3"]}}
          ],
          "effect": [{"fn": "tombstone_delete", "field": "retracted", "element": {"param": "member"}}],
          "intent": {"contains": {"field": "retracted", "element": {"param": "member"}}}
        },
        {
          "name": "revealEstimates",
          "update_kind": "incremental",
          "effect": [{"fn": "lattice_join_field", "field": "phase", "value": {"value": "Revealed"}}],
          "intent": {"ge": {"field": "phase", "value": {"value": "Revealed"}}}
        },
        {
          "name": "closePoker",
          "update_kind": "incremental",
          "effect": [{"fn": "lattice_join_field", "field": "phase", "value": {"value": "Closed"}}],
          "intent": {"ge": {"field": "phase", "value": {"value": "Closed"}}}
        },
        {
          "name": "noteDissent",
          "update_kind": "incremental",
          "params": [
            {"name": "member", "domain": {"kind": "enum", "symbols": ["m1", "m2", "m3"]}}
          ],
          "effect": [{"fn": "insert_keyed", "field": "dissent", "element": {"param": "member"}}],
          "intent": {"contains": {"field": "dissent", "element": {"param": "member"}}}
        }
      ]
    },
    {
      "name": "GroomingSession",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "topics", "domain": {"kind": "set", "symbols": ["t_auth", "t_sync", "t_report"]}},
          {"name": "acknowledged", "domain": {"kind": "set", "symbols": ["t_auth", "t_sync", "t_report"]}},
          {"name": "timebox_minutes", "domain": {"kind": "int", "min": 0, "max": 90}}
        ],
        "initial": {"topics": [], "acknowledged": [], "timebox_minutes": 30}
      },
      "operations": [
        {
          "name": "proposeTopic",
          "update_kind": "incremental",
          "params": [
            {"name": "topic", "domain": {"kind": "enum", "symbols": ["t_auth", "t_sync", "t_report"]}}
          ],
          "effect": [{"fn": "insert_keyed", "field": "topics", "element": {"param": "topic"}}],
          "intent": {"contains": {"field": "topics", "element": {"param": "topic"}}}
        },
        {
          "name": "acknowledgeTopic",
          "update_kind": "incremental",
          "params": [
            {"name": "topic", "domain": {"kind": "enum", "symbols": ["t_auth", "t_sync", "t_report"]}}
          ],
          "effect": [{"fn": "insert_keyed", "field": "acknowledged", "element": {"param": "topic"}}],
          "intent": {"contains": {"field": "acknowledged", "element": {"param": "topic"}}}
        },
        {
          "name": "extendTimebox",
          "update_kind": "incremental",
          "params": [{"name": "minutes", "domain": {"kind": "int", "min": 5, "max": 10}}],
          "effect": [{"fn": "add_delta", "field": "timebox_minutes", "delta": {"param": "minutes"}}]
        }
      ]
    },
    {
      "name": "SprintCommitment",
      "writers": "any",
      "state_space": {
        "fields": [
          {"name": "committed", "domain": {"kind": "set", "symbols": ["story_auth", "story_sync", "story_report"]}}
        ],
        "initial": {"committed": []}
      },
      "operations": [
        {
          "name": "commitStory",
          "update_kind": "incremental",
          "params": [
            {"name": "story", "domain": {"kind": "enum", "symbols": ["story_auth", "story_sync", "story_report"]}}
          ],
          "effect": [{"fn": "insert_keyed", "field": "committed", "element": {"param": "story"}}],
          "intent": {"contains": {"field": "committed", "element": {"param": "story"}}}
        }
      ]
    }
  ]
})JSON";

// --- scenarios ---------------------------------------------------------------

const char* const kLwwConflict = R"JSON({
  "schema": "eclat-scenario/1",
  "name": "taskboard-lww-conflict",
  "model": "corpus:taskboard-naive",
  "replicas": 2,
  "seed": 7,
  "delivery_policy": "causal",
  "merge_policy": "lww",
  "network": {"delay": [2, 2], "reorder": false, "duplicate_probability": 0.0},
  "workload": {
    "script": [
      {"at": 1, "replica": 0, "aggregate": "Task", "op": "updateTask",
       "params": {"status": "InProgress", "comment": "none"}},
      {"at": 2, "replica": 1, "aggregate": "Task", "op": "updateTask",
       "params": {"status": "Blocked", "comment": "c_blocker"}}
    ]
  }
})JSON";

const char* const kSupersetResurrection = R"JSON({
  "schema": "eclat-scenario/1",
  "name": "taskboard-superset-resurrection",
  "model": "corpus:taskboard-naive",
  "replicas": 2,
  "seed": 7,
  "delivery_policy": "causal",
  "merge_policy": "superset",
  "network": {"delay": [1, 1], "reorder": false, "duplicate_probability": 0.0},
  "workload": {
    "script": [
      {"at": 1, "replica": 0, "aggregate": "Task", "op": "addComment",
       "params": {"comment": "c_scope"}},
      {"at": 3, "replica": 0, "aggregate": "Task", "op": "deleteComment",
       "params": {"comment": "c_scope"}},
      {"at": 3, "replica": 1, "aggregate": "Task", "op": "addComment",
       "params": {"comment": "c_design"}}
    ]
  }
})JSON";

const char* const kTaskboardSafeStorm = R"JSON({
  "schema": "eclat-scenario/1",
  "name": "taskboard-safe-storm",
  "model": "corpus:taskboard-safe",
  "replicas": 3,
  "seed": 7,
  "delivery_policy": "causal",
  "merge_policy": "none",
  "network": {"delay": [1, 4], "reorder": true, "duplicate_probability": 0.2,
              "partitions": [{"from": 6, "to": 12, "groups": [[0], [1, 2]]}]},
  "workload": {
    "random": {
      "ops_per_replica": 6,
      "start": 1,
      "window": 10,
      "mix": [
        {"aggregate": "Task", "op": "startWork", "weight": 2, "params": {}},
        {"aggregate": "Task", "op": "blockTask", "weight": 1, "params": {}},
        {"aggregate": "Task", "op": "addComment", "weight": 3,
         "params": {"comment": {"choice": ["c_scope", "c_design", "c_blocker"]}}},
        {"aggregate": "Task", "op": "deleteComment", "weight": 2,
         "params": {"comment": {"choice": ["c_scope", "c_design", "c_blocker"]}}}
      ]
    }
  }
})JSON";

const char* const kRedesignAStorm = R"JSON({
  "schema": "eclat-scenario/1",
  "name": "moodbarometer-redesign-a-storm",
  "model": "corpus:moodbarometer-redesign-a",
  "replicas": 3,
  "seed": 42,
  "delivery_policy": "causal",
  "merge_policy": "none",
  "network": {"delay": [1, 4], "reorder": true, "duplicate_probability": 0.2,
              "partitions": [{"from": 5, "to": 10, "groups": [[0], [1, 2]]}]},
  "workload": {
    "random": {
      "ops_per_replica": 6,
      "start": 1,
      "window": 10,
      "mix": [
        {"aggregate": "MoodVotes", "op": "placeVote", "weight": 4,
         "params": {"member": {"replica_symbol": ["m1", "m2", "m3", "m4", "m5"]},
                    "mood": {"choice": ["low", "neutral", "high"]}}},
        {"aggregate": "VotingLifecycle", "op": "openForVotes", "weight": 2, "params": {}},
        {"aggregate": "VotingLifecycle", "op": "closeVoting", "weight": 1, "params": {}},
        {"aggregate": "VotingSchedule", "op": "extendVotingPeriod", "weight": 1,
         "max_per_replica": 1, "params": {"extra_days": {"range": [1, 2]}}}
      ]
    }
  }
})JSON";

const char* const kBacklogPokerSession = R"JSON({
  "schema": "eclat-scenario/1",
  "name": "backlog-poker-session",
  "model": "corpus:backlog",
  "replicas": 3,
  "seed": 11,
  "delivery_policy": "causal",
  "merge_policy": "none",
  "network": {"delay": [1, 3], "reorder": true, "duplicate_probability": 0.1},
  "workload": {
    "random": {
      "ops_per_replica": 8,
      "start": 1,
      "window": 12,
      "mix": [
        {"aggregate": "PlanningPoker", "op": "castEstimate", "weight": 4,
         "params": {"member": {"replica_symbol": ["m1", "m2", "m3"]},
                    "card": {"choice": ["card_s", "card_m", "card_l"]}}},
        {"aggregate": "PlanningPoker", "op": "retractEstimate", "weight": 1,
         "params": {"member": {"replica_symbol": ["m1", "m2", "m3"]}}},
        {"aggregate": "PlanningPoker", "op": "revealEstimates", "weight": 1, "params": {}},
        {"aggregate": "PlanningPoker", "op": "noteDissent", "weight": 1,
         "params": {"member": {"replica_symbol": ["m1", "m2", "m3"]}}},
        {"aggregate": "GroomingSession", "op": "proposeTopic", "weight": 2,
         "params": {"topic": {"choice": ["t_auth", "t_sync", "t_report"]}}},
        {"aggregate": "GroomingSession", "op": "acknowledgeTopic", "weight": 1,
         "params": {"topic": {"choice": ["t_auth", "t_sync", "t_report"]}}},
        {"aggregate": "GroomingSession", "op": "extendTimebox", "weight": 1,
         "max_per_replica": 1, "params": {"minutes": {"range": [5, 10]}}},
        {"aggregate": "ProductBacklog", "op": "addStory", "weight": 2,
         "params": {"story": {"choice": ["story_auth", "story_sync", "story_report"]}}},
        {"aggregate": "ProductBacklog", "op": "queueForGrooming", "weight": 1,
         "params": {"story": {"choice": ["story_auth", "story_sync", "story_report"]}}},
        {"aggregate": "UserStory", "op": "advanceStatus", "weight": 1,
         "params": {"to": {"choice": ["Ready", "InSprint", "Done"]}}},
        {"aggregate": "UserStory", "op": "tagStory", "weight": 1,
         "params": {"tag": {"choice": ["frontend", "backend"]}}},
        {"aggregate": "SprintCommitment", "op": "commitStory", "weight": 1,
         "params": {"story": {"choice": ["story_auth", "story_sync", "story_report"]}}}
      ]
    }
  }
})JSON";

const char* const kBacklogConcurrentEdit = R"JSON({
  "schema": "eclat-scenario/1",
  "name": "backlog-concurrent-edit",
  "model": "corpus:backlog",
  "replicas": 2,
  "seed": 3,
  "delivery_policy": "causal",
  "merge_policy": "none",
  "network": {"delay": [1, 1], "reorder": false, "duplicate_probability": 0.0},
  "workload": {
    "script": [
      {"at": 1, "replica": 0, "aggregate": "UserStory", "op": "editStoryDescription",
       "params": {"text": "draft_b"}},
      {"at": 1, "replica": 1, "aggregate": "UserStory", "op": "editStoryDescription",
       "params": {"text": "draft_c"}}
    ]
  }
})JSON";

} // namespace eclat::corpus_data
