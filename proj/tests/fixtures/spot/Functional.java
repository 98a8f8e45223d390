package spot;

import java.util.function.BiFunction;
import java.util.function.IntPredicate;
import java.util.function.Predicate;
import java.util.function.UnaryOperator;

class Functional {
  Predicate<String> empty = s -> s.isEmpty();
  IntPredicate odd = i -> i % 2 == 1;
  BiFunction<Integer, Integer, Integer> add = (a, b) -> a + b;
  UnaryOperator<String> up = s -> s.toUpperCase();
}
