#pragma once

#include <stdexcept>
#include <string>

namespace anchors {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyDocumentError : Error {
  using Error::Error;
};

struct EmptyCorpusError : Error {
  using Error::Error;
};

struct BothEmptyError : Error {
  using Error::Error;
};

struct DegenerateLabelsError : Error {
  using Error::Error;
};

// Multiplicity anchor component out of [0, m_j].
struct InvalidRangeError : Error {
  using Error::Error;
};

// Exact enumeration would exceed the outcome cap.
struct TooLargeError : Error {
  using Error::Error;
};

struct TooManyAnchorsError : Error {
  using Error::Error;
};

struct InvalidEpsilonError : Error {
  using Error::Error;
};

// A proposition hypothesis (e.g. lambda_j * idf_j != 0) does not hold.
struct HypothesisViolatedError : Error {
  using Error::Error;
};

// Two words share the same lambda_j * idf_j rank value.
struct RankTiesError : Error {
  using Error::Error;
};

struct EmptyBucketError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace anchors
