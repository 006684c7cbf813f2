from elva_pricing.cli import elva

if __name__ == '__main__':
    elva()
