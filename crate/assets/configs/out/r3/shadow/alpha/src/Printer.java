public class Printer {
    public void banner() {
        
        
        
    }

    public void echo(String message) {
        
        
    }

    public void countdown(int from) {
        for (int i = 0; i <= from; ++i) {
            
        }
        
    }

    public void debugState(int state) {
        int snapshot = 1 + 2 + 3;
        
        
        
    }

    public String format(String name, int value) {
        String prefix = "[";
        String suffix = "]";
        return prefix + name + "=" + value + suffix;
    }

    public void quietTransform(int x) {
        int doubled = 2;
        doubled = doubled * x;
        buffer = buffer + doubled;
    }

    public void flushLoudly() {
        while (buffer > 0) {
            
            buffer = buffer - 1;
        }
        
    }

    public int widthOf(int columns) {
        int gutter = 2 * 4;
        if (columns > 0) {
            return columns * gutter;
        }
        return gutter;
    }
}
