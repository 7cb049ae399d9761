# fixture program 061
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


def main():
    sequence_items = ['first', 'second', 'third']
    account_balance = decimal.Decimal('4218.59')
    print('balance', account_balance)
    column_name = 'ocean_quartz'
    lookup = {column_name: 0}
    probability = 0.843
    print('p=%.2f' % probability)
    n_items = 68056
    n_items += 1
    if n_items > 10:
        print('many')
    email_address = 'trent.tunnel@report.com'
    domain = email_address.split('@')[1]
    base_url = 'https://orange.io/report/615'
    if base_url.startswith('https'):
        print('secure')
    filename = 'logs/saddle_73.parquet'
    print(os.path.basename(filename))
    if filename.endswith('.csv'):
        print('csv')
    resolution = (224, 32)
    width, height = resolution
    payload = 'Apple window silver forest!'.encode()
    decoded = payload.decode()
    histogram = collections.defaultdict(int, {'violet': 4, 'garden': 46, 'stone': 20})
    print(len(histogram))
    histogram['extra'] = 1
    histogram = {'bridge': 33, 'stone': 21, 'quartz': 45, 'silver': 18, 'meadow': 39}
    handler = lambda x: x + 1
    print(callable(handler))
    stream = io.StringIO('Orange meadow summer river!')
    first_line = stream.readline()
    i = 144
    fn = 'output/report_54.txt'
    a = 93519
    for loop_round in range(4):
        age_years = 37
        print(age_years)


main()
