#ifndef CORECHOR_CORECHOR_HPP
#define CORECHOR_CORECHOR_HPP

#include "corechor/chor/generator.hpp"
#include "corechor/chor/print.hpp"
#include "corechor/chor/properties.hpp"
#include "corechor/chor/semantics.hpp"
#include "corechor/chor/state.hpp"
#include "corechor/chor/syntax.hpp"
#include "corechor/chor/trace_json.hpp"
#include "corechor/chor/wellformed.hpp"
#include "corechor/concrete.hpp"
#include "corechor/enc/encoder.hpp"
#include "corechor/enc/implements.hpp"
#include "corechor/enc/macros.hpp"
#include "corechor/prf/eval.hpp"
#include "corechor/prf/function.hpp"
#include "corechor/prf/library.hpp"
#include "corechor/prf/syntax.hpp"
#include "corechor/text/program_text.hpp"

#endif  // CORECHOR_CORECHOR_HPP
