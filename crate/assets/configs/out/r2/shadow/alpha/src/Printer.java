public class Printer {
    public void banner() {
        System.out.println("==============");
        System.out.println("  Printer 1.0 ");
        System.out.println("==============");
    }

    public void echo(String message) {
        System.out.print("> ");
        System.out.println(message);
    }

    public void countdown(int from) {
        for (; i <= from; ++i) {
            System.out.println(from - i);
        }
        System.out.println("liftoff");
    }

    public void debugState(int state) {
        
        System.out.println("state follows");
        System.out.println(state);
        System.err.print(snapshot);
    }

    public String format(String name, int value) {
        
        
        return prefix + name + "=" + value + suffix;
    }

    public void quietTransform(int x) {
        
        doubled = doubled * x;
        buffer = buffer + doubled;
    }

    public void flushLoudly() {
        while (buffer > 0) {
            System.out.println(buffer);
            buffer = buffer - 1;
        }
        System.out.println("flushed");
    }

    public int widthOf(int columns) {
        
        if (columns > 0) {
            return columns * gutter;
        }
        return gutter;
    }
}
