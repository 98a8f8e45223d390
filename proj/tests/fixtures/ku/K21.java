package ku;

import javax.jms.MessageListener;

abstract class K21 implements MessageListener {
}
