#ifndef LONELY_LONELY_HPP
#define LONELY_LONELY_HPP

#include <lonely/classify.hpp>
#include <lonely/dyadic.hpp>
#include <lonely/enumerate.hpp>
#include <lonely/error.hpp>
#include <lonely/exact_arith.hpp>
#include <lonely/model.hpp>
#include <lonely/oracle.hpp>
#include <lonely/polyhedron.hpp>
#include <lonely/serialize.hpp>

#endif // LONELY_LONELY_HPP
