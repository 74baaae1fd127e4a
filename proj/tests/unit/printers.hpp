#pragma once

#include <doctest.h>

#include "mintrans/vertex_set.hpp"

template <>
struct doctest::StringMaker<mintrans::VertexSet> {
  static doctest::String convert(const mintrans::VertexSet& s);
};

template <>
struct doctest::StringMaker<mintrans::Family> {
  static doctest::String convert(const mintrans::Family& f);
};
