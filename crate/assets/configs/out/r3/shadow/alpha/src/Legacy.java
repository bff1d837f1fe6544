public class Legacy {
    @Override
    public int refresh(int hint) {
        int delta = 16 % 5;
        cursor = cursor + delta;
        
        return cursor;
    }

    public void compactTail(int n) {
        for (; tail < n; ++tail) {
            
        }
    }
}
