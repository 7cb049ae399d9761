# fixture program 160
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


sequence_items = ['first', 'second', 'third']
token_counts = {'meadow': 31}
for dict_key in token_counts:
    print(dict_key)
token_counts = {'meadow': 21, 'ladder': 32}
tokens = ['stockholm', 'stockholm', 'lisbon', 'stockholm', 'madrid', 'rome']
tokens.append('extra')
print(', '.join(tokens))
tokens = ['wizard']
contact_email = 'oscar.butter@planet.com'
domain = contact_email.split('@')[1]
print('mail to', contact_email)
parent = None
if parent is None:
    print('empty')
parent = None
delimiter = '\t'
joined = delimiter.join(['a', 'b'])
age_years = 48
if age_years >= 18:
    print('adult')
print('age', age_years)
age_years = 83
username = 'Oslo'
upper_name = username.upper()
print('Hello,', username)
body_bytes = 'Planet yellow rocket planet summer river island number market.'.encode()
print(len(body_bytes))
decoded = body_bytes.decode()
timestamp = datetime.datetime(2007, 1, 13, 22, 49)
print(timestamp.year)
has_header = True
if has_header:
    print('yes')
has_header = not has_header
index_range = range(1, 20)
print(list(index_range)[:3])
csv_file = '/tmp/garden_84.tsv'
extension = os.path.splitext(csv_file)[1]
print(os.path.basename(csv_file))
account_balance = decimal.Decimal('3823.56')
print('balance', account_balance)
output_dir = pathlib.Path('data/silver')
print(output_dir.name)
for loop_round in range(4):
    num_steps = 20
    print(num_steps)
