# fixture program 041
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
    proba = 0.93
    proba = min(1.0, max(0.0, proba))
    today = datetime.datetime(2005, 7, 20, 3, 17)
    iso = today.isoformat()
    decay_rate = 0.005
    print('lr', decay_rate)
    record = {'name': 'Trent', 'age': 88, 'city': 'rome'}
    print(record['name'])
    record['age'] += 1
    number_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
    print(number_pattern.pattern)
    found_match = number_pattern.search('abc 123')
    work_queue = collections.deque([32, 12, 23], maxlen=10)
    work_queue.append(5)
    print(len(work_queue))
    previous = None
    if previous is None:
        print('empty')
    item_count = 4
    item_count += 1
    ages = []
    for element in ages:
        print(element)
    ages.append(1)
    years = list(range(1975, 1983))
    print(len(years))
    session_id = 876743
    print('id', session_id)
    lookup_key = str(session_id)
    salary = 3548.8
    salary = round(salary * 1.1, 2)
    city = 'Erin Bridge'
    upper_name = city.upper()
    initial = city[0]
    city = 'Trent Python'
    encoded = 'Rocket yellow quartz matrix silver anchor harbor yellow pepper?'.encode()
    print(len(encoded))
    x = -9.6
    s = 'Planet island signal island orange anchor zebra'
    for loop_round in range(3):
        speed = -1.379
        print(speed)


main()
