#pragma once

// Bundled corpus documents (see corpus_data.cpp).

namespace eclat::corpus_data {

extern const char* const kMoodBarometerBaseline;
extern const char* const kMoodBarometerRedesignA;
extern const char* const kMoodBarometerRedesignB;
extern const char* const kTaskboardNaive;
extern const char* const kTaskboardSafe;
extern const char* const kBacklog;

extern const char* const kLwwConflict;
extern const char* const kSupersetResurrection;
extern const char* const kTaskboardSafeStorm;
extern const char* const kRedesignAStorm;
extern const char* const kBacklogPokerSession;
extern const char* const kBacklogConcurrentEdit;

} // namespace eclat::corpus_data
