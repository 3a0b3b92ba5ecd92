#pragma once

#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "pythag/errors.hpp"

// Matches a pythag::error by its kind, so tests assert on the contract
// (the error taxonomy) rather than on message wording.
class KindIs : public Catch::Matchers::MatcherGenericBase {
  public:
    explicit KindIs(pythag::errc kind) : kind_(kind) {}

    bool match(const pythag::error& e) const { return e.kind() == kind_; }

    std::string describe() const override {
        return std::string("has kind ") + pythag::errc_name(kind_);
    }

  private:
    pythag::errc kind_;
};
