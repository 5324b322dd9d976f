class Singleton(type):
    '''One shared instance per class; reset() drops it so the next call rebuilds from class defaults'''
    def __init__(cls, name, bases, namespace):
        super().__init__(name, bases, namespace)
        cls.instance = None

    def __call__(cls, *args, **kw):
        if cls.instance is None:
            cls.instance = super().__call__(*args, **kw)
        return cls.instance

    def reset(cls):
        cls.instance = None
