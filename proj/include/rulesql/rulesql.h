#pragma once

#include "rulesql/answer.h"
#include "rulesql/errors.h"
#include "rulesql/evaluator.h"
#include "rulesql/executor.h"
#include "rulesql/explorer.h"
#include "rulesql/grounding.h"
#include "rulesql/labels.h"
#include "rulesql/manifest.h"
#include "rulesql/question.h"
#include "rulesql/rules.h"
#include "rulesql/sql.h"
#include "rulesql/table.h"
#include "rulesql/value.h"
