package spot;

import java.time.Duration;
import java.time.LocalDate;
import java.util.regex.Pattern;

class TimeAndText {
  String describe(String text) {
    LocalDate today = LocalDate.now();
    Duration d = Duration.ofHours(2);
    StringBuilder sb = new StringBuilder(text.substring(1));
    Pattern p = Pattern.compile("a+");
    return String.format("%s %s", today, d);
  }
}
