#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rulesql/answer.h"
#include "rulesql/sql.h"
#include "rulesql/table.h"

namespace rulesql {

// Indices of rows satisfying every condition, ascending. EQUAL compares
// normalized values of the column's kind; GREATER/LESS compare reals; a null
// cell satisfies nothing. Throws IndexError / TypeError for invalid
// conditions (including GREATER/LESS on a TEXT column).
std::vector<std::size_t> FilterRows(const Table& t, std::span<const Condition> conds);

// NONE returns the values as a multiset. COUNT counts all values (nulls
// included). MAX/MIN/SUM/AVG skip nulls and return an empty answer when no
// real remains; they throw TypeError on text.
Answer Aggregate(std::span<const Value> vals, AggOp agg);

// Aggregate(projection of q.sel over FilterRows(t, q.conds), q.agg).
Answer Execute(const SqlQuery& q, const Table& t);

}  // namespace rulesql
