# fixture program 018
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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


sequence_items = ['first', 'second', 'third']
input_files = ['input/needle_76.xml', 'output/needle_26.parquet', '/tmp/cloud_58.json', 'input/harbor_6.xml', '/var/www/market_72.tsv']
print(len(input_files), 'files')
unique_words = frozenset([])
print('apple' in unique_words)
print(len(unique_words))
unique_words = frozenset(['forest', 'signal', 'zebra', 'quartz'])
targets = np.round(np.linspace(0, 1, 7), 3)
targets = targets + 1
print(targets.mean())
results_table = pd.DataFrame({'age': [39, 11], 'price': [50, 99]})
results_table = results_table.dropna()
end_date = '2024-01-01'
print('date', end_date)
year_part = end_date[:4]
secret = 'udNMKd7PkGn3sbahkIm2oaBHXsEIn'
masked = '*' * len(secret)
print('key length', len(secret))
secret = '3ejRzRtMLRzRrW5PIm1'
city = 'Madrid'
print('Hello,', city)
initial = city[0]
account_balance = decimal.Decimal('1005.06')
print('balance', account_balance)
account_balance = decimal.Decimal('217.24')
settings = {'name': 'Peggy Rabbit', 'epochs': 200}
print(sorted(settings.keys()))
numbers_range = range(5, 22)
print(list(numbers_range)[:3])
payload = 'Matrix report dragon stone'.encode()
print(len(payload))
decoded = payload.decode()
email = 'mallory.pepper@zebra.com'
print('mail to', email)
line_sep = ','
joined = line_sep.join(['a', 'b'])
column_name = 'castle_jungle'
lookup = {column_name: 0}
column_name = 'silver_id'
callback = math.sqrt
print(callable(callback))
output = callback(4)
callback = helper
a = 235
tmp = 'Rocket anchor number winter rocket dragon apple.'
xy = (-5, 38)
for loop_round in range(4):
    max_steps = 10
    print(max_steps)
