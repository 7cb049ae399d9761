# fixture program 067
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
log_files = ['input/silver_85.json']
print(len(log_files), 'files')
age_years = 78
print('age', age_years)
age_group = age_years // 10
index_range = range(1, 35)
print(list(index_range)[:3])
employee = {'name': 'Bob Forest', 'age': 62, 'city': 'vienna'}
employee['age'] += 1
iterations = 100
print('epochs', iterations)
for step_number in range(min(iterations, 2)):
    print(step_number)
iterations = 10
decay_rate = 0.99
step_value = decay_rate * 0.5
print('lr', decay_rate)
decay_rate = 0.3
raw_bytes = 'Ocean winter candle silver castle number forest window'.encode()
print(len(raw_bytes))
account_balance = decimal.Decimal('2484.43')
print('balance', account_balance)
start_date_obj = datetime.date(2010, 11, 24)
iso = start_date_obj.isoformat()
print(start_date_obj.year)
start_date_obj = datetime.date(2014, 4, 24)
base_url = 'https://summer.io/stone/152'
if base_url.startswith('https'):
    print('secure')
item_count = 18
print('count:', item_count)
assert item_count >= 0
item_count = 7
sentences = ['bridge', 'candle', 'ladder', 'orange', 'falcon', 'jungle', 'apple', 'saddle']
for element in sentences:
    print(element)
page_size = 1024
print('size', page_size)
sender = 'bob.harbor@anchor.com'
domain = sender.split('@')[1]
print('mail to', sender)
data_dir = pathlib.Path('data/zebra')
print(data_dir.name)
for loop_round in range(4):
    session_id = 684900
    print(session_id)
