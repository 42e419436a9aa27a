#pragma once

// Umbrella header: exact combinatorics of k-Stirling and k-quasi-Stirling
// words, their tree encodings, descent-polynomial machinery and the
// verification layer.

#include "qstirling/analysis.hpp"
#include "qstirling/bijections.hpp"
#include "qstirling/config.hpp"
#include "qstirling/genfunc.hpp"
#include "qstirling/mpoly.hpp"
#include "qstirling/numbers.hpp"
#include "qstirling/poly.hpp"
#include "qstirling/rational.hpp"
#include "qstirling/series.hpp"
#include "qstirling/sturm.hpp"
#include "qstirling/textio.hpp"
#include "qstirling/trees.hpp"
#include "qstirling/words.hpp"
