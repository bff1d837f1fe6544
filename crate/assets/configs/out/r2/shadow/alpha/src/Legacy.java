public class Legacy {
    @Override
    public int refresh(int hint) {
        
        cursor = cursor + delta;
        System.out.println("refreshed");
        return cursor;
    }

    public void compactTail(int n) {
        for (; tail < n; ++tail) {
            System.out.println("compacting");
        }
    }
}
